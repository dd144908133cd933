#include "frecheb/verify.hpp"

#include <algorithm>
#include <cmath>

namespace frecheb {

double agreement_tolerance(const VerifyOptions& opts) { return std::max(opts.oracle_tol, 1e-6); }

bool direct_membership_at(const FuzzySystem& sys, double delta, const VerifyOptions& opts,
                          bool* exact) {
    if (exact) *exact = false;
    if (sys.kind == ImplicationKind::Godel) {
        for (int decimals = 0; decimals <= 6; ++decimals) {
            if (const auto member = godel_grid_membership(sys, delta, decimals)) {
                if (exact) *exact = true;
                return *member;
            }
        }
    }
    return e_membership(sys, delta, std::nullopt, opts.tolerance);
}

bool maxt_membership_at(const MaxTSystem& sys, double delta, const VerifyOptions& opts,
                        bool* exact) {
    if (exact) *exact = false;
    if (sys.kind == ImplicationKind::Godel) {
        for (int decimals = 0; decimals <= 6; ++decimals) {
            if (const auto member = godel_grid_f_membership(sys, delta, decimals)) {
                if (exact) *exact = true;
                return *member;
            }
        }
    }
    return f_membership(sys, delta, opts.tolerance);
}

SystemCheck verify_system(const FuzzySystem& sys, const VerifyOptions& opts) {
    SystemCheck check{chebyshev_distance(sys), oracle_nabla(sys, opts.oracle_tol)};
    check.abs_diff = std::abs(check.report.nabla - check.oracle.inf_value);
    check.agrees = check.abs_diff <= agreement_tolerance(opts);
    check.direct_member = direct_membership_at(sys, check.report.nabla, opts, &check.exact_membership);
    check.verdict_matches =
        (check.report.verdict == Attainability::Minimum) == check.direct_member;
    check.passed = check.agrees && (check.verdict_matches || check.report.borderline());
    return check;
}

FuzzySystem sweep_system(ImplicationKind kind, std::size_t max_m, std::size_t max_n,
                         std::uint64_t seed, std::size_t t, std::optional<int> decimals) {
    auto rng = random_stream(seed, t);
    const std::size_t m = uniform_index(rng, 1, max_m);
    const std::size_t n = uniform_index(rng, 1, max_n);
    return generate_random_system(m, n, kind, rng(), decimals);
}

SweepSummary sweep_random(ImplicationKind kind, std::size_t max_m, std::size_t max_n,
                          std::size_t trials, std::uint64_t seed, const VerifyOptions& opts,
                          std::optional<int> decimals) {
    SweepSummary summary;
    for (std::size_t t = 0; t < trials; ++t) {
        const FuzzySystem sys = sweep_system(kind, max_m, max_n, seed, t, decimals);
        const SystemCheck check = verify_system(sys, opts);
        ++summary.systems;
        summary.max_abs_diff = std::max(summary.max_abs_diff, check.abs_diff);
        if (check.report.borderline()) ++summary.borderline;
        if (check.report.verdict == Attainability::Infimum) ++summary.infimum_verdicts;
        if (!check.passed) {
            ++summary.failures;
            summary.failing_seeds.push_back(t);
        }
    }
    return summary;
}

}  // namespace frecheb
