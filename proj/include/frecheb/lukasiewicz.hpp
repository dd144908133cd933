#pragma once

#include <cstddef>

#include "frecheb/report.hpp"

namespace frecheb {

struct LukaCellStats {
    double zeta;  ///< max_l L(1 - gamma_ji, 1 - gamma_li, beta_l, beta_j)
};

/// L(u,v,x,y) = max((u - y)^+, min((x - v)^+, (x - y + u - v)^+ / 2)).
double l_func(double u, double v, double x, double y);

LukaCellStats luka_cell(const FuzzySystem& sys, std::size_t j, std::size_t i);

/// tau_j ranges over every column, including those with gamma_ji = 0.
/// The distance is always attained.
ChebyshevReport luka_nabla(const FuzzySystem& sys);

}  // namespace frecheb
