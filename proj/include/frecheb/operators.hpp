#pragma once

#include "frecheb/algebra.hpp"

namespace frecheb {

/// Default tolerance for equality of computed vectors.
inline constexpr double kDefaultTolerance = 1e-9;

/// The system  gamma (min-I) x = beta  with gamma of size m x n.
struct FuzzySystem {
    UnitMatrix gamma;
    UnitVector beta;
    ImplicationKind kind;

    /// Throws DimensionMismatch unless gamma.rows() == beta.size().
    FuzzySystem(UnitMatrix gamma, UnitVector beta, ImplicationKind kind);

    std::size_t m() const { return gamma.rows(); }
    std::size_t n() const { return gamma.cols(); }

    /// Same matrix and implication, another second member.
    FuzzySystem with_beta(UnitVector other) const;
};

struct ConsistencyResult {
    bool consistent;
    UnitVector epsilon;  ///< greatest solution when consistent
    double residual;     ///< ||gamma (min-I) epsilon - beta||
};

/// epsilon = gamma^t (max-T) beta
UnitVector potential_solution(const FuzzySystem& sys);

ConsistencyResult check_consistency(const FuzzySystem& sys, double tol = kDefaultTolerance);

/// G(xi) = gamma (min-I) (gamma^t (max-T) xi). Inflationary, monotone and
/// idempotent; its fixed points are exactly the consistent second members.
UnitVector apply_G(const FuzzySystem& sys, const UnitVector& xi);

/// F(c) = a (max-T) (a^t (min-I) c), the closure used for max-T systems.
UnitVector apply_F(const UnitMatrix& a, ImplicationKind kind, const UnitVector& c);

}  // namespace frecheb
