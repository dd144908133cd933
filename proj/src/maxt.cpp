#include "frecheb/maxt.hpp"

#include <algorithm>
#include <string>

#include "frecheb/godel.hpp"

namespace frecheb {

MaxTSystem::MaxTSystem(UnitMatrix a_, UnitVector b_, ImplicationKind kind_)
    : a(std::move(a_)), b(std::move(b_)), kind(kind_) {
    if (a.rows() != b.size()) {
        throw DimensionMismatch("a has " + std::to_string(a.rows()) + " rows but b has " +
                                std::to_string(b.size()) + " entries");
    }
}

double phi(double u, double x, double y, double z) {
    if (u == 0.0) return x;
    return positive_part(x * y - u * z) / (u + y);
}

double sigma_gg(double u, double x, double y, double z) {
    return std::max(positive_part(x - u), std::min(phi(u, x, y, z), positive_part(y - z)));
}

double sigma_l(double u, double x, double y, double z) {
    const double v = x + u - 1.0;
    return std::min(x, std::max(positive_part(v), positive_part(v + y - z) / 2.0));
}

namespace {

// Inner term for (row i, column j); the outer max_i min_j is shared by all kinds.
double cell_term(const MaxTSystem& sys, std::size_t i, std::size_t j) {
    const auto& a = sys.a;
    const auto& b = sys.b;
    double acc = 0.0;
    switch (sys.kind) {
        case ImplicationKind::Godel:
            acc = positive_part(b[i] - a(i, j));
            for (std::size_t k = 0; k < a.rows(); ++k) acc = std::max(acc, sigma_g(b[i], a(k, j), b[k]));
            break;
        case ImplicationKind::Goguen:
            for (std::size_t k = 0; k < a.rows(); ++k)
                acc = std::max(acc, sigma_gg(a(i, j), b[i], a(k, j), b[k]));
            break;
        case ImplicationKind::Lukasiewicz:
            for (std::size_t k = 0; k < a.rows(); ++k)
                acc = std::max(acc, sigma_l(1.0 - a(i, j), b[i], a(k, j), b[k]));
            break;
    }
    return acc;
}

}  // namespace

double delta_maxt(const MaxTSystem& sys) {
    double delta = 0.0;
    for (std::size_t i = 0; i < sys.a.rows(); ++i) {
        double row_min = 1.0;
        for (std::size_t j = 0; j < sys.a.cols(); ++j) row_min = std::min(row_min, cell_term(sys, i, j));
        delta = std::max(delta, row_min);
    }
    return delta;
}

}  // namespace frecheb
