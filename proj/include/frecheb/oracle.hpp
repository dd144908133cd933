#pragma once

/**
 * @file oracle.hpp
 * @brief Independent verification of the closed forms.
 *
 * The distance is the infimum of the up-closed set
 *
 *   E = { d in [0,1] : G(beta_(d)) <= beta^(d) },
 *
 * so it can be bracketed by bisection on the membership predicate without
 * touching any of the theta/zeta machinery. Row sets E_j restrict the test to
 * component j. The same holds for max-T systems with
 * { d : b_(d) <= F(b^(d)) }.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "frecheb/maxt.hpp"
#include "frecheb/operators.hpp"

namespace frecheb {

inline constexpr double kOracleTolerance = 1e-9;
inline constexpr int kMaxBisectionSteps = 60;

struct OracleEstimate {
    double inf_value = 0.0;
    double bracket_width = 0.0;
    bool member_at_inf = false;
};

/// G(beta_(delta)) <= beta^(delta) + slack, over every row or over `row` only.
bool e_membership(const FuzzySystem& sys, double delta,
                  std::optional<std::size_t> row = std::nullopt, double slack = 0.0);

/// Exact variant of e_membership for Godel systems whose entries and delta lie on
/// the grid of multiples of 10^-decimals / 2. Runs on scaled integers, so branch
/// points of the Godel implication are decided without rounding. Returns nullopt
/// when some value is off the grid.
std::optional<bool> godel_grid_membership(const FuzzySystem& sys, double delta, int decimals,
                                          std::optional<std::size_t> row = std::nullopt);

/// Exact variant of f_membership for max-min systems on the same grid.
std::optional<bool> godel_grid_f_membership(const MaxTSystem& sys, double delta, int decimals);

/// b_(delta) <= F(b^(delta)) + slack.
bool f_membership(const MaxTSystem& sys, double delta, double slack = 0.0);

/**
 * Infimum of an up-closed predicate on [0,1].
 *
 * Keeps a bracket [lo, hi] with predicate(lo) false and predicate(hi) true
 * (or returns 0 when predicate(0) holds) until hi - lo <= tol. The reported
 * value is the decimal with fewest digits inside the final bracket, so
 * infima that are short decimals come back exactly and member_at_inf is
 * evaluated there.
 *
 * A coarse pre-scan of the predicate throws PredicateNotUpClosed if a true
 * sample is followed by a false one, or if predicate(1) is false.
 */
OracleEstimate bisect_inf(const std::function<bool(double)>& predicate,
                          double tol = kOracleTolerance);

/// Bisection estimate of inf E (or inf E_j).
OracleEstimate oracle_nabla(const FuzzySystem& sys, double tol = kOracleTolerance,
                            std::optional<std::size_t> row = std::nullopt);

/// Bisection estimate of min { d : b_(d) <= F(b^(d)) }.
OracleEstimate oracle_delta(const MaxTSystem& sys, double tol = kOracleTolerance);

/// Deterministic stream keyed by (seed, index); streams for distinct indices are independent.
std::mt19937_64 random_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform on [0,1) with 53 random bits; identical across standard libraries.
double uniform_unit(std::mt19937_64& rng);

/// Uniform integer in [lo, hi].
std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

double round_to_decimals(double v, int decimals);

/// G(xi) for the given xi; always a consistent second member.
UnitVector sample_consistent_rhs(const FuzzySystem& sys, const UnitVector& xi);

/// Draws xi uniformly from [0,1]^m and returns G(xi).
UnitVector sample_consistent_rhs(const FuzzySystem& sys, std::uint64_t seed);

FuzzySystem generate_random_system(std::size_t m, std::size_t n, ImplicationKind kind,
                                   std::uint64_t seed,
                                   std::optional<int> decimals = std::nullopt);

/// a is n x m, b has n entries.
MaxTSystem generate_random_maxt_system(std::size_t n, std::size_t m, ImplicationKind kind,
                                       std::uint64_t seed,
                                       std::optional<int> decimals = std::nullopt);

}  // namespace frecheb
