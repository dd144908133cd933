#include "frecheb/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace frecheb {

namespace {

void require_row(const FuzzySystem& sys, std::optional<std::size_t> row) {
    if (row && *row >= sys.m()) {
        throw IndexOutOfRange("row " + std::to_string(*row) + " outside system with " +
                              std::to_string(sys.m()) + " rows");
    }
}

std::optional<std::int64_t> to_grid(double v, std::int64_t scale) {
    const double scaled = v * static_cast<double>(scale);
    const double r = std::round(scaled);
    if (std::abs(scaled - r) > 1e-6) return std::nullopt;
    return static_cast<std::int64_t>(r);
}

std::int64_t grid_scale(int decimals) {
    if (decimals < 0 || decimals > 15) throw DomainError("grid decimals must lie in [0, 15]");
    std::int64_t scale = 2;
    for (int k = 0; k < decimals; ++k) scale *= 10;
    return scale;
}

std::optional<std::vector<std::int64_t>> grid_values(std::span<const double> values,
                                                     std::int64_t scale) {
    std::vector<std::int64_t> out;
    out.reserve(values.size());
    for (const double v : values) {
        const auto g = to_grid(v, scale);
        if (!g) return std::nullopt;
        out.push_back(*g);
    }
    return out;
}

}  // namespace

bool e_membership(const FuzzySystem& sys, double delta, std::optional<std::size_t> row,
                  double slack) {
    require_row(sys, row);
    const UnitVector g = apply_G(sys, lower_shift(sys.beta, delta));
    const UnitVector upper = upper_shift(sys.beta, delta);
    if (row) return g[*row] <= upper[*row] + slack;
    return leq(g, upper, slack);
}

std::optional<bool> godel_grid_membership(const FuzzySystem& sys, double delta, int decimals,
                                          std::optional<std::size_t> row) {
    require_row(sys, row);
    if (sys.kind != ImplicationKind::Godel) {
        throw KindMismatch("grid membership is only exact for the Godel implication");
    }
    const std::int64_t scale = grid_scale(decimals);
    const auto d = to_grid(delta, scale);
    const auto g = grid_values(sys.gamma.values(), scale);
    const auto b = grid_values(sys.beta.values(), scale);
    if (!d || !g || !b) return std::nullopt;
    const std::size_t m = sys.m();
    const std::size_t n = sys.n();

    std::vector<std::int64_t> column(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            const std::int64_t lower = std::max<std::int64_t>((*b)[l] - *d, 0);
            column[i] = std::max(column[i], std::min((*g)[l * n + i], lower));
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (row && *row != j) continue;
        std::int64_t gj = scale;
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t impl = (*g)[j * n + i] <= column[i] ? scale : column[i];
            gj = std::min(gj, impl);
        }
        if (gj > std::min((*b)[j] + *d, scale)) return false;
    }
    return true;
}

std::optional<bool> godel_grid_f_membership(const MaxTSystem& sys, double delta, int decimals) {
    if (sys.kind != ImplicationKind::Godel) {
        throw KindMismatch("grid membership is only exact for the Godel implication");
    }
    const std::int64_t scale = grid_scale(decimals);
    const auto d = to_grid(delta, scale);
    const auto a = grid_values(sys.a.values(), scale);
    const auto b = grid_values(sys.b.values(), scale);
    if (!d || !a || !b) return std::nullopt;
    const std::size_t n = sys.a.rows();
    const std::size_t m = sys.a.cols();

    std::vector<std::int64_t> x(m, scale);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t upper = std::min((*b)[i] + *d, scale);
            const std::int64_t aij = (*a)[i * m + j];
            x[j] = std::min(x[j], aij <= upper ? scale : upper);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t fi = 0;
        for (std::size_t j = 0; j < m; ++j) fi = std::max(fi, std::min((*a)[i * m + j], x[j]));
        if (std::max<std::int64_t>((*b)[i] - *d, 0) > fi) return false;
    }
    return true;
}

bool f_membership(const MaxTSystem& sys, double delta, double slack) {
    const UnitVector f = apply_F(sys.a, sys.kind, upper_shift(sys.b, delta));
    return leq(lower_shift(sys.b, delta), f, slack);
}

OracleEstimate bisect_inf(const std::function<bool(double)>& predicate, double tol) {
    if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");

    constexpr int kSamples = 16;
    std::array<bool, kSamples + 1> sampled{};
    for (int k = 0; k <= kSamples; ++k) sampled[k] = predicate(static_cast<double>(k) / kSamples);
    if (!sampled[kSamples]) throw PredicateNotUpClosed("predicate does not hold at 1");
    for (int k = 1; k <= kSamples; ++k) {
        if (sampled[k - 1] && !sampled[k]) {
            throw PredicateNotUpClosed("predicate holds at " + std::to_string(double(k - 1) / kSamples) +
                                       " but not at " + std::to_string(double(k) / kSamples));
        }
    }
    if (sampled[0]) return {0.0, 0.0, true};

    int first_true = kSamples;
    while (first_true > 0 && sampled[first_true - 1]) --first_true;
    double lo = static_cast<double>(first_true - 1) / kSamples;
    double hi = static_cast<double>(first_true) / kSamples;
    for (int step = 0; step < kMaxBisectionSteps && hi - lo > tol; ++step) {
        const double mid = lo + (hi - lo) / 2.0;
        (predicate(mid) ? hi : lo) = mid;
    }

    const double mid = lo + (hi - lo) / 2.0;
    double value = mid;
    double scale = 1.0;
    for (int digits = 0; digits <= 17; ++digits, scale *= 10.0) {
        const double c = std::round(mid * scale) / scale;
        if (c >= lo && c <= hi) {
            value = c;
            break;
        }
    }
    return {value, hi - lo, predicate(value)};
}

OracleEstimate oracle_nabla(const FuzzySystem& sys, double tol, std::optional<std::size_t> row) {
    require_row(sys, row);
    return bisect_inf([&](double d) { return e_membership(sys, d, row); }, tol);
}

OracleEstimate oracle_delta(const MaxTSystem& sys, double tol) {
    return bisect_inf([&](double d) { return f_membership(sys, d); }, tol);
}

std::mt19937_64 random_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

double round_to_decimals(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

UnitVector sample_consistent_rhs(const FuzzySystem& sys, const UnitVector& xi) {
    return apply_G(sys, xi);
}

UnitVector sample_consistent_rhs(const FuzzySystem& sys, std::uint64_t seed) {
    auto rng = random_stream(seed, 0);
    std::vector<double> xi(sys.m());
    for (double& v : xi) v = uniform_unit(rng);
    return apply_G(sys, UnitVector(std::move(xi)));
}

namespace {

std::vector<double> random_entries(std::mt19937_64& rng, std::size_t count,
                                   std::optional<int> decimals) {
    std::vector<double> out(count);
    for (double& v : out) {
        v = uniform_unit(rng);
        if (decimals) v = round_to_decimals(v, *decimals);
    }
    return out;
}

}  // namespace

FuzzySystem generate_random_system(std::size_t m, std::size_t n, ImplicationKind kind,
                                   std::uint64_t seed, std::optional<int> decimals) {
    if (m == 0 || n == 0) throw DimensionMismatch("random system needs m, n >= 1");
    auto rng = random_stream(seed, 0);
    auto gamma = random_entries(rng, m * n, decimals);
    auto beta = random_entries(rng, m, decimals);
    return FuzzySystem(UnitMatrix(m, n, std::move(gamma)), UnitVector(std::move(beta)), kind);
}

MaxTSystem generate_random_maxt_system(std::size_t n, std::size_t m, ImplicationKind kind,
                                       std::uint64_t seed, std::optional<int> decimals) {
    if (m == 0 || n == 0) throw DimensionMismatch("random system needs n, m >= 1");
    auto rng = random_stream(seed, 0);
    auto a = random_entries(rng, n * m, decimals);
    auto b = random_entries(rng, n, decimals);
    return MaxTSystem(UnitMatrix(n, m, std::move(a)), UnitVector(std::move(b)), kind);
}

}  // namespace frecheb
