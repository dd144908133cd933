#include <doctest.h>

#include "frecheb/operators.hpp"
#include "frecheb/oracle.hpp"
#include "support.hpp"

using namespace frecheb;
using doctest::Approx;

TEST_CASE("potential solution and consistency") {
    const auto ex1 = testing::example_consistent();
    CHECK(potential_solution(ex1) == UnitVector{0.58, 0.88});
    const auto c = check_consistency(ex1);
    CHECK(c.consistent);
    CHECK(c.residual == 0.0);

    CHECK(potential_solution(testing::example_godel_infimum()) == UnitVector{0.41, 0.31});
    CHECK(potential_solution(ex1.with_beta({0.0, 0.0})) == UnitVector{0.0, 0.0});
    CHECK_FALSE(check_consistency(testing::example_godel_minimum()).consistent);
    for (auto kind : testing::kAllKinds)
        CHECK(check_consistency(testing::example_with(kind).with_beta({1.0, 1.0})).consistent);
}

TEST_CASE("G on worked inputs") {
    const auto ex1 = testing::example_consistent();
    CHECK(apply_G(ex1, {0.58, 0.88}) == UnitVector{0.58, 0.88});
    CHECK(apply_G(ex1, {1.0, 1.0}) == UnitVector{1.0, 1.0});
    CHECK(apply_G(testing::example_godel_minimum(), {0.0, 0.25})[0] == Approx(0.25));
    CHECK_THROWS_AS(apply_G(ex1, {0.5}), DimensionMismatch);
}

TEST_CASE("F on worked inputs") {
    const UnitMatrix a{{0.6, 0.26}, {0.49, 0.9}};
    CHECK(apply_F(a, ImplicationKind::Godel, {0.58, 0.88}) == UnitVector{0.58, 0.88});
    const UnitMatrix with_top{{1.0, 1.0}, {0.3, 0.2}};
    CHECK(apply_F(with_top, ImplicationKind::Godel, {1.0, 1.0})[0] == 1.0);

    auto rng = random_stream(3, 0);
    for (auto kind : testing::kAllKinds) {
        for (int t = 0; t < 500; ++t) {
            const auto sys = generate_random_maxt_system(3, 4, kind, rng());
            const auto c = max_t_compose(sys.a, kind, testing::random_unit_vector(rng, 4));
            CHECK(chebyshev_norm(apply_F(sys.a, kind, c), c) <= 1e-9);
        }
    }
}

TEST_CASE("closure laws of G") {
    auto rng = random_stream(5, 0);
    for (auto kind : testing::kAllKinds) {
        for (int t = 0; t < 1000; ++t) {
            const std::size_t m = uniform_index(rng, 1, 5), n = uniform_index(rng, 1, 5);
            const auto sys = generate_random_system(m, n, kind, rng());
            const auto xi = testing::random_unit_vector(rng, m);
            const auto g = apply_G(sys, xi);
            CHECK(leq(xi, g, 1e-12));
            CHECK(chebyshev_norm(apply_G(sys, g), g) <= 1e-9);
            const auto gt = sys.gamma.transposed();
            CHECK(chebyshev_norm(max_t_compose(gt, kind, g), max_t_compose(gt, kind, xi)) <= 1e-9);
            CHECK(check_consistency(sys.with_beta(g)).consistent);

            std::vector<double> bigger(xi.begin(), xi.end());
            for (double& v : bigger) v += (1.0 - v) * uniform_unit(rng);
            CHECK(leq(g, apply_G(sys, UnitVector(bigger)), 1e-12));
        }
    }
}
