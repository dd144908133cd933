#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "frecheb/report.hpp"

namespace frecheb {

enum class ApproximationStatus { MinimumAttained, ApproximationSetEmpty };

std::string_view to_string(ApproximationStatus s);

struct ApproximationResult {
    ApproximationStatus status;
    std::optional<UnitVector> lowest_approximation;  ///< G(beta_(nabla))
    std::optional<UnitVector> approximate_solution;  ///< gamma^t (max-T) beta_(nabla)
    std::optional<double> achieved_distance;         ///< ||beta - lowest_approximation||
};

/// Lowest Chebyshev approximation and an approximate solution when the distance
/// is attained. When it is not (Godel only), no consistent second member sits at
/// distance nabla and the result is ApproximationSetEmpty.
/// Throws ReportMismatch if the report was not computed for this system.
ApproximationResult build_approximation(const FuzzySystem& sys, const ChebyshevReport& report);

/// G(beta_(delta)) for a caller-chosen delta > nabla. Always a consistent second
/// member within delta of beta, but not a Chebyshev approximation.
struct NearApproximation {
    double delta;
    UnitVector approximation;
    UnitVector solution;
    double achieved_distance;
};

/// Throws DomainError unless nabla < delta <= 1.
NearApproximation near_approximation(const FuzzySystem& sys, const ChebyshevReport& report,
                                     double delta);

struct LowestCheck {
    bool passed = true;
    std::size_t members_sampled = 0;

    explicit operator bool() const { return passed; }
};

/// Samples xi uniformly in the band [beta_(nabla), beta^(nabla)], keeps G(xi) when
/// it lies at distance nabla from beta, and checks that the lowest approximation
/// is below every kept member. Vacuously true when nothing is kept.
LowestCheck verify_lowest(const FuzzySystem& sys, const ApproximationResult& result,
                          std::size_t trials, std::uint64_t seed,
                          double tol = kDefaultTolerance);

}  // namespace frecheb
