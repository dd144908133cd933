#pragma once

/**
 * @file godel.hpp
 * @brief Chebyshev distance of the second member of a min-Godel system.
 *
 * For each row j and column i:
 *
 *   theta_ji = max { beta_l - gamma_ji : gamma_ji <= gamma_li }
 *   zeta_ji  = max_l sigma_G(beta_l, gamma_li, beta_j)
 *   tau_j    = min { max(theta_ji, zeta_ji) : gamma_ji > 0 }     (min of nothing = 1)
 *   nabla_j  = min(1 - beta_j, tau_j),   nabla = max_j nabla_j
 *
 * Unlike the other two implications the distance need not be attained. Row j
 * attains nabla_j iff nabla_j = 1 - beta_j or nabla_j equals
 *
 *   nabla~_j = min { zeta_ji : gamma_ji > 0, theta_ji < zeta_ji }   (min of nothing = 1).
 *
 * Every set E_j is up-closed, so nabla is attained iff every row with
 * nabla_j = nabla attains it; rows strictly below nabla are members at nabla.
 */

#include <cstddef>

#include "frecheb/report.hpp"

namespace frecheb {

struct GodelCellStats {
    double theta;  ///< signed; may be negative
    double zeta;
    bool support;
    bool borderline;
};

/// sigma_G(x,y,z) = min((x-z)^+/2, (y-z)^+). Solves min(y, x_(d)) <= z^(d) iff sigma_G <= d.
double sigma_g(double x, double y, double z);

/// Zero-based indices. Throws IndexOutOfRange.
GodelCellStats godel_cell(const FuzzySystem& sys, std::size_t j, std::size_t i);

/// Throws KindMismatch unless sys.kind is Godel.
ChebyshevReport godel_nabla(const FuzzySystem& sys);

}  // namespace frecheb
