#pragma once

/**
 * @file maxt.hpp
 * @brief Closed-form Chebyshev distances for max-T systems  a (max-T) x = b.
 *
 * These are the known formulas for the dual problem. They serve as
 * cross-validation targets for apply_F and the bisection oracle:
 *
 *   Delta_M = max_i min_j max[(b_i - a_ij)^+, max_k sigma_G(b_i, a_kj, b_k)]
 *   Delta_P = max_i min_j max_k sigma_GG(a_ij, b_i, a_kj, b_k)
 *   Delta_L = max_i min_j max_k sigma_L(1 - a_ij, b_i, a_kj, b_k)
 *
 * In every case Delta = min { d : b_(d) <= F(b^(d)) }.
 */

#include "frecheb/algebra.hpp"

namespace frecheb {

/// a is n x m, b has n entries (note the swapped naming relative to FuzzySystem).
struct MaxTSystem {
    UnitMatrix a;
    UnitVector b;
    ImplicationKind kind;

    MaxTSystem(UnitMatrix a, UnitVector b, ImplicationKind kind);
};

/// (xy - uz)^+ / (u + y) if u > 0, x if u = 0.
double phi(double u, double x, double y, double z);

/// max[(x - u)^+, min(phi(u,x,y,z), (y - z)^+)]
double sigma_gg(double u, double x, double y, double z);

/// min(x, max(v^+, (v + y - z)^+ / 2)) with v = x + u - 1.
double sigma_l(double u, double x, double y, double z);

double delta_maxt(const MaxTSystem& sys);

}  // namespace frecheb
