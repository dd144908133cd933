#pragma once

#include <cstddef>

#include "frecheb/report.hpp"

namespace frecheb {

/// theta over W(j,i) = { l : gamma_ji <= gamma_li, gamma_li > 0 } with max of nothing = 0.
struct GoguenCellStats {
    double theta;
    double zeta;
    bool support;
};

/// P(u,x,y,z): 0 when u = 0 or y = 0, otherwise
///   max[(x - u/y)^+, min((xy - uz)^+ / (u + y), 1 - z)].
/// For u > 0 and d < 1 - z:  y * x_(d) / u <= z^(d)  iff  P <= d.
double p_func(double u, double x, double y, double z);

GoguenCellStats goguen_cell(const FuzzySystem& sys, std::size_t j, std::size_t i);

/// Same shape as the Godel formula with theta/zeta built from P. The distance is
/// always attained, so the verdict is always Minimum.
ChebyshevReport goguen_nabla(const FuzzySystem& sys);

}  // namespace frecheb
