#include <doctest.h>

#include "frecheb/algebra.hpp"
#include "frecheb/oracle.hpp"
#include "support.hpp"

using namespace frecheb;
using doctest::Approx;

TEST_CASE("unit values reject out-of-range input") {
    CHECK_THROWS_AS(UnitValue(1.5), DomainError);
    CHECK_THROWS_AS(UnitValue(-0.01), DomainError);
    CHECK_THROWS_AS(UnitValue(std::nan("")), DomainError);
    CHECK(UnitValue(1.0 + 1e-13).value() == 1.0);
    CHECK(UnitValue(-1e-13).value() == 0.0);
    CHECK_THROWS_AS(UnitMatrix(2, 2, {0.1, 0.2, 0.3}), DimensionMismatch);
    CHECK_THROWS_AS(UnitVector({0.2, 2.0}), DomainError);
}

TEST_CASE("implication tags") {
    CHECK(parse_implication("goguen") == ImplicationKind::Goguen);
    CHECK(to_string(ImplicationKind::Lukasiewicz) == "lukasiewicz");
    CHECK_THROWS_AS(parse_implication("product"), DomainError);
}

TEST_CASE("t-norm values") {
    CHECK(t_norm(ImplicationKind::Godel, UnitValue(0.26), UnitValue(0.4)) == Approx(0.26));
    CHECK(t_norm(ImplicationKind::Lukasiewicz, UnitValue(0.9), UnitValue(0.4)) == Approx(0.3));
    for (auto kind : testing::kAllKinds) {
        CHECK(t_norm(kind, UnitValue(0.37), UnitValue(1.0)) == Approx(0.37));
        CHECK(t_norm(kind, UnitValue(1.0), UnitValue(0.37)) == Approx(0.37));
    }
}

TEST_CASE("residuum values") {
    CHECK(residuum(ImplicationKind::Godel, UnitValue(0.6), UnitValue(0.26)) == 0.26);
    CHECK(residuum(ImplicationKind::Lukasiewicz, UnitValue(0.49), UnitValue(0.3)) == Approx(0.81));
    CHECK(residuum(ImplicationKind::Goguen, UnitValue(0.6), UnitValue(0.1)) == Approx(1.0 / 6.0));
    for (auto kind : testing::kAllKinds) {
        CHECK(residuum(kind, UnitValue(0.3), UnitValue(0.3)) == 1.0);
        CHECK(residuum(kind, UnitValue(0.0), UnitValue(0.0)) == 1.0);
    }
}

TEST_CASE("compositions") {
    const UnitMatrix gamma{{0.6, 0.49}, {0.26, 0.9}};
    CHECK(max_t_compose(gamma.transposed(), ImplicationKind::Godel, {0.58, 0.88}) ==
          UnitVector{0.58, 0.88});
    CHECK(min_impl_compose(gamma, ImplicationKind::Godel, {0.58, 0.88}) == UnitVector{0.58, 0.88});
    const UnitMatrix ex5{{0.41, 0.07}, {0.29, 0.31}};
    CHECK(max_t_compose(ex5.transposed(), ImplicationKind::Godel, {0.88, 0.46}) ==
          UnitVector{0.41, 0.31});
    CHECK(max_t_compose(gamma, ImplicationKind::Goguen, {0.0, 0.0}) == UnitVector{0.0, 0.0});
    for (auto kind : testing::kAllKinds)
        CHECK(min_impl_compose(gamma, kind, {1.0, 1.0}) == UnitVector{1.0, 1.0});
    const UnitVector goguen = min_impl_compose(gamma, ImplicationKind::Goguen, {0.10, 0.36});
    CHECK(goguen[0] == Approx(1.0 / 6.0));
    CHECK_THROWS_AS(max_t_compose(gamma, ImplicationKind::Godel, {0.1}), DimensionMismatch);
    CHECK_THROWS_AS(min_impl_compose(gamma, ImplicationKind::Godel, {0.1, 0.2, 0.3}),
                    DimensionMismatch);
}

TEST_CASE("shifted bounds") {
    auto [lo, hi] = shifted_bounds({0.1, 0.4}, UnitValue(0.15));
    CHECK(lo[0] == 0.0);
    CHECK(lo[1] == Approx(0.25));
    CHECK(hi[0] == Approx(0.25));
    CHECK(hi[1] == Approx(0.55));
    auto [lo0, hi0] = shifted_bounds({0.1, 0.4}, UnitValue(0.0));
    CHECK(lo0 == UnitVector{0.1, 0.4});
    CHECK(hi0 == UnitVector{0.1, 0.4});
    auto [lo1, hi1] = shifted_bounds({0.88, 0.46}, UnitValue(1.0));
    CHECK(lo1 == UnitVector{0.0, 0.0});
    CHECK(hi1 == UnitVector{1.0, 1.0});
}

TEST_CASE("residuation adjunction on a grid") {
    for (auto kind : testing::kAllKinds) {
        for (int a = 0; a <= 20; ++a) {
            for (int b = 0; b <= 20; ++b) {
                const double x = a / 20.0, y = b / 20.0;
                const double r = residuum_raw(kind, x, y);
                CHECK(t_norm_raw(kind, x, r) <= y + 1e-12);
                CHECK(y <= residuum_raw(kind, x, t_norm_raw(kind, x, y)) + 1e-12);
                for (int c = 0; c <= 20; ++c) {
                    const double z = c / 20.0;
                    const bool lhs = t_norm_raw(kind, x, z) <= y + 1e-12;
                    const bool rhs = z <= r + 1e-12;
                    if (lhs != rhs) FAIL("adjunction fails at ", x, " ", y, " ", z);
                }
            }
        }
    }
}

TEST_CASE("residuum monotonicity on random triples") {
    auto rng = random_stream(7, 0);
    for (auto kind : testing::kAllKinds) {
        for (int t = 0; t < 2000; ++t) {
            double x = uniform_unit(rng), x2 = uniform_unit(rng), y = uniform_unit(rng);
            if (x > x2) std::swap(x, x2);
            CHECK(residuum_raw(kind, x2, y) <= residuum_raw(kind, x, y));
            CHECK(residuum_raw(kind, y, x) <= residuum_raw(kind, y, x2));
        }
    }
}

TEST_CASE("distance band equivalence") {
    auto rng = random_stream(11, 0);
    for (int t = 0; t < 2000; ++t) {
        const auto v = testing::random_unit_vector(rng, 4);
        const auto c = testing::random_unit_vector(rng, 4);
        const double delta = uniform_unit(rng);
        auto [lo, hi] = shifted_bounds(v, UnitValue(delta));
        CHECK(leq(lo, v));
        CHECK(leq(v, hi));
        const bool near = chebyshev_norm(v, c) <= delta;
        CHECK(near == (leq(lo, c) && leq(c, hi)));
    }
}
