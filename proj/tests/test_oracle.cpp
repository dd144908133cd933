#include <doctest.h>

#include <cmath>

#include "frecheb/oracle.hpp"
#include "frecheb/report.hpp"
#include "support.hpp"

using namespace frecheb;

TEST_CASE("row membership at worked points") {
    CHECK(e_membership(testing::example_godel_minimum(), 0.15, 0));
    CHECK_FALSE(e_membership(testing::example_godel_minimum(), 0.1, 0));
    CHECK_FALSE(e_membership(testing::example_godel_infimum(), 0.15, 1));
    CHECK(e_membership(testing::example_godel_infimum(), 0.1501, 1));
}

TEST_CASE("row oracle on the infimum system") {
    const auto est = oracle_nabla(testing::example_godel_infimum(), kOracleTolerance, 1);
    CHECK(est.inf_value == 0.15);
    CHECK_FALSE(est.member_at_inf);
    CHECK(est.bracket_width <= kOracleTolerance);
}

TEST_CASE("bisection on a threshold predicate") {
    const auto est = bisect_inf([](double d) { return d >= 0.3; });
    CHECK(est.inf_value == 0.3);
    CHECK(est.member_at_inf);
    CHECK(bisect_inf([](double) { return true; }).inf_value == 0.0);
    CHECK_THROWS_AS(bisect_inf([](double) { return false; }), PredicateNotUpClosed);
    CHECK_THROWS_AS(bisect_inf([](double d) { return d < 0.5; }), PredicateNotUpClosed);
}

TEST_CASE("exact grid membership") {
    const auto inf = testing::example_godel_infimum();
    CHECK(godel_grid_membership(inf, 0.15, 2) == std::optional<bool>(false));
    CHECK(godel_grid_membership(inf, 0.16, 2) == std::optional<bool>(true));
    CHECK_FALSE(godel_grid_membership(inf, 0.151, 2).has_value());
    CHECK(godel_grid_membership(inf, 0.151, 3) == std::optional<bool>(true));
    CHECK_THROWS_AS(godel_grid_membership(testing::example_with(ImplicationKind::Goguen), 0.1, 2),
                    KindMismatch);
}

TEST_CASE("random streams are deterministic and distinct") {
    auto a = random_stream(42, 3), b = random_stream(42, 3), c = random_stream(42, 4);
    const auto x = a(), y = b(), z = c();
    CHECK(x == y);
    CHECK(x != z);
    const auto s1 = generate_random_system(3, 4, ImplicationKind::Goguen, 9, 2);
    const auto s2 = generate_random_system(3, 4, ImplicationKind::Goguen, 9, 2);
    CHECK(s1.gamma == s2.gamma);
    CHECK(s1.beta == s2.beta);
    for (double v : s1.gamma.values()) CHECK(std::abs(v * 100 - std::round(v * 100)) < 1e-9);
    CHECK(round_to_decimals(0.123456, 2) == 0.12);
}

TEST_CASE("sampled consistent members sit no closer than nabla") {
    for (auto kind : testing::kAllKinds) {
        for (std::uint64_t s = 0; s < 200; ++s) {
            const auto sys = generate_random_system(3, 3, kind, s, 2);
            const double nabla = chebyshev_distance(sys).nabla;
            for (std::uint64_t k = 0; k < 20; ++k) {
                const auto d = sample_consistent_rhs(sys, s * 100 + k);
                CHECK(chebyshev_norm(sys.beta, d) >= nabla - 1e-9);
            }
        }
    }
}
