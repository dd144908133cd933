#include "frecheb/approximation.hpp"

#include <string>
#include <vector>

#include "frecheb/oracle.hpp"

namespace frecheb {

std::string_view to_string(ApproximationStatus s) {
    switch (s) {
        case ApproximationStatus::MinimumAttained: return "minimum_attained";
        case ApproximationStatus::ApproximationSetEmpty: return "approximation_set_empty";
    }
    return "unknown";
}

namespace {

void require_match(const FuzzySystem& sys, const ChebyshevReport& report) {
    if (report.kind != sys.kind) {
        throw ReportMismatch("report computed for " + std::string(to_string(report.kind)) +
                             " but system uses " + std::string(to_string(sys.kind)));
    }
    if (report.rows.size() != sys.m()) {
        throw ReportMismatch("report has " + std::to_string(report.rows.size()) +
                             " rows but system has " + std::to_string(sys.m()));
    }
    if (report.verdict == Attainability::NotComputed) {
        throw ReportMismatch("report carries no attainability verdict");
    }
}

}  // namespace

ApproximationResult build_approximation(const FuzzySystem& sys, const ChebyshevReport& report) {
    require_match(sys, report);
    if (report.verdict == Attainability::Infimum) {
        return {ApproximationStatus::ApproximationSetEmpty, std::nullopt, std::nullopt, std::nullopt};
    }
    const UnitVector lower = lower_shift(sys.beta, report.nabla);
    UnitVector solution = max_t_compose(sys.gamma.transposed(), sys.kind, lower);
    UnitVector lowest = min_impl_compose(sys.gamma, sys.kind, solution);
    const double distance = chebyshev_norm(sys.beta, lowest);
    return {ApproximationStatus::MinimumAttained, std::move(lowest), std::move(solution), distance};
}

NearApproximation near_approximation(const FuzzySystem& sys, const ChebyshevReport& report,
                                     double delta) {
    require_match(sys, report);
    if (!(delta > report.nabla) || delta > 1.0) {
        throw DomainError("near approximation needs nabla < delta <= 1 (nabla = " +
                          std::to_string(report.nabla) + ", delta = " + std::to_string(delta) + ")");
    }
    const UnitVector lower = lower_shift(sys.beta, delta);
    UnitVector solution = max_t_compose(sys.gamma.transposed(), sys.kind, lower);
    UnitVector approx = min_impl_compose(sys.gamma, sys.kind, solution);
    const double distance = chebyshev_norm(sys.beta, approx);
    return {delta, std::move(approx), std::move(solution), distance};
}

LowestCheck verify_lowest(const FuzzySystem& sys, const ApproximationResult& result,
                          std::size_t trials, std::uint64_t seed, double tol) {
    if (result.status != ApproximationStatus::MinimumAttained || !result.lowest_approximation ||
        !result.achieved_distance) {
        throw ReportMismatch("verify_lowest needs an attained approximation");
    }
    const UnitVector& lowest = *result.lowest_approximation;
    const double nabla = *result.achieved_distance;
    const UnitVector lower = lower_shift(sys.beta, nabla);
    const UnitVector upper = upper_shift(sys.beta, nabla);

    LowestCheck check;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = random_stream(seed, t);
        std::vector<double> xi(sys.m());
        for (std::size_t j = 0; j < sys.m(); ++j) xi[j] = lower[j] + (upper[j] - lower[j]) * uniform_unit(rng);
        const UnitVector d = apply_G(sys, UnitVector(std::move(xi)));
        if (chebyshev_norm(sys.beta, d) > nabla + tol) continue;
        ++check.members_sampled;
        if (!leq(lowest, d, tol)) check.passed = false;
    }
    return check;
}

}  // namespace frecheb
