#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "frecheb/oracle.hpp"
#include "frecheb/report.hpp"

namespace frecheb {

struct VerifyOptions {
    double tolerance = kDefaultTolerance;  ///< slack for vector comparisons
    double oracle_tol = kOracleTolerance;  ///< bisection bracket width
};

/// Closed form against the bisection oracle for one system.
struct SystemCheck {
    ChebyshevReport report;
    OracleEstimate oracle;
    double abs_diff = 0.0;
    bool agrees = false;         ///< abs_diff <= max(oracle_tol, 1e-6)
    bool direct_member = false;  ///< G(beta_(nabla)) <= beta^(nabla)
    bool exact_membership = false;  ///< direct_member was decided on a decimal grid
    bool verdict_matches = false;   ///< (verdict == Minimum) == direct_member
    bool passed = false;            ///< agrees, and verdict matches unless borderline
};

/// Agreement threshold between closed form and oracle.
double agreement_tolerance(const VerifyOptions& opts);

/// Direct test of nabla in E. Godel systems on a decimal grid (up to 6 places)
/// are decided exactly; everything else uses floating evaluation with
/// opts.tolerance slack on the final comparison.
bool direct_membership_at(const FuzzySystem& sys, double delta, const VerifyOptions& opts,
                          bool* exact = nullptr);

/// b_(delta) <= F(b^(delta)) decided the same way: exactly on a decimal grid
/// for max-min systems, with opts.tolerance slack otherwise.
bool maxt_membership_at(const MaxTSystem& sys, double delta, const VerifyOptions& opts,
                        bool* exact = nullptr);

SystemCheck verify_system(const FuzzySystem& sys, const VerifyOptions& opts = {});

struct SweepSummary {
    std::size_t systems = 0;
    std::size_t failures = 0;
    std::size_t borderline = 0;
    std::size_t infimum_verdicts = 0;
    double max_abs_diff = 0.0;
    std::vector<std::uint64_t> failing_seeds;
};

/// Random systems with m in [1, max_m], n in [1, max_n], entries rounded to
/// `decimals` places. System t is generated from a stream keyed by (seed, t).
SweepSummary sweep_random(ImplicationKind kind, std::size_t max_m, std::size_t max_n,
                          std::size_t trials, std::uint64_t seed,
                          const VerifyOptions& opts = {}, std::optional<int> decimals = 2);

/// The t-th system of sweep_random, for reproducing a failure.
FuzzySystem sweep_system(ImplicationKind kind, std::size_t max_m, std::size_t max_n,
                         std::uint64_t seed, std::size_t t, std::optional<int> decimals = 2);

}  // namespace frecheb
