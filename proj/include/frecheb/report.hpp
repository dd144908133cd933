#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "frecheb/operators.hpp"

namespace frecheb {

/// Whether the Chebyshev distance belongs to the set E it is the infimum of.
enum class Attainability { Minimum, Infimum, NotComputed };

std::string_view to_string(Attainability a);

/// Per (j, i) quantities. theta is absent for the Lukasiewicz kind.
struct CellStats {
    std::optional<double> theta;
    double zeta = 0.0;
    bool support = false;     ///< gamma_ji > 0
    bool borderline = false;  ///< |theta - zeta| <= kBorderlineTolerance
};

struct RowDiagnostics {
    double nabla = 0.0;
    double tau = 1.0;
    double one_minus_beta = 0.0;
    std::optional<double> nabla_tilde;  ///< Godel only
    bool attainable = true;             ///< nabla_j belongs to E_j
    std::optional<std::size_t> argmin_i;
    bool borderline = false;  ///< attainability rests on a near-tie theta ~ zeta
    std::vector<CellStats> cells;
};

struct ChebyshevReport {
    ImplicationKind kind;
    double nabla = 0.0;
    std::vector<RowDiagnostics> rows;
    Attainability verdict = Attainability::NotComputed;

    bool borderline() const;
};

/// Ties |theta - zeta| below this are flagged as numerically fragile.
inline constexpr double kBorderlineTolerance = 1e-9;

/// Dispatches to the closed form matching sys.kind.
ChebyshevReport chebyshev_distance(const FuzzySystem& sys);

}  // namespace frecheb
