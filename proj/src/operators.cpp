#include "frecheb/operators.hpp"

#include <string>

namespace frecheb {

FuzzySystem::FuzzySystem(UnitMatrix gamma_, UnitVector beta_, ImplicationKind kind_)
    : gamma(std::move(gamma_)), beta(std::move(beta_)), kind(kind_) {
    if (gamma.rows() != beta.size()) {
        throw DimensionMismatch("gamma has " + std::to_string(gamma.rows()) +
                                " rows but beta has " + std::to_string(beta.size()) +
                                " entries");
    }
}

FuzzySystem FuzzySystem::with_beta(UnitVector other) const {
    return FuzzySystem(gamma, std::move(other), kind);
}

UnitVector potential_solution(const FuzzySystem& sys) {
    return max_t_compose(sys.gamma.transposed(), sys.kind, sys.beta);
}

ConsistencyResult check_consistency(const FuzzySystem& sys, double tol) {
    UnitVector eps = potential_solution(sys);
    const double residual = chebyshev_norm(min_impl_compose(sys.gamma, sys.kind, eps), sys.beta);
    return {residual <= tol, std::move(eps), residual};
}

UnitVector apply_G(const FuzzySystem& sys, const UnitVector& xi) {
    if (xi.size() != sys.m()) {
        throw DimensionMismatch("G expects a vector of size " + std::to_string(sys.m()) +
                                ", got " + std::to_string(xi.size()));
    }
    return min_impl_compose(sys.gamma, sys.kind, max_t_compose(sys.gamma.transposed(), sys.kind, xi));
}

UnitVector apply_F(const UnitMatrix& a, ImplicationKind kind, const UnitVector& c) {
    if (c.size() != a.rows()) {
        throw DimensionMismatch("F expects a vector of size " + std::to_string(a.rows()) +
                                ", got " + std::to_string(c.size()));
    }
    return max_t_compose(a, kind, min_impl_compose(a.transposed(), kind, c));
}

}  // namespace frecheb
