#include "frecheb/goguen.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace frecheb {

double p_func(double u, double x, double y, double z) {
    if (u == 0.0 || y == 0.0) return 0.0;
    return std::max(positive_part(x - u / y),
                    std::min(positive_part(x * y - u * z) / (u + y), 1.0 - z));
}

GoguenCellStats goguen_cell(const FuzzySystem& sys, std::size_t j, std::size_t i) {
    if (j >= sys.m() || i >= sys.n()) {
        throw IndexOutOfRange("cell (" + std::to_string(j) + "," + std::to_string(i) +
                              ") outside " + std::to_string(sys.m()) + "x" +
                              std::to_string(sys.n()) + " system");
    }
    const auto& g = sys.gamma;
    const auto& b = sys.beta;
    const double gji = g(j, i);

    bool any = false;
    double theta = 0.0;
    double zeta = 0.0;
    for (std::size_t l = 0; l < sys.m(); ++l) {
        const double gli = g(l, i);
        if (gji <= gli && gli > 0.0) {
            const double t = b[l] - gji / gli;
            theta = any ? std::max(theta, t) : t;
            any = true;
        }
        zeta = std::max(zeta, p_func(gji, b[l], gli, b[j]));
    }
    // j belongs to W(j,i) whenever gamma_ji > 0.
    assert(any || gji == 0.0);
    return {theta, zeta, gji > 0.0};
}

ChebyshevReport goguen_nabla(const FuzzySystem& sys) {
    if (sys.kind != ImplicationKind::Goguen) {
        throw KindMismatch("goguen_nabla called on a " + std::string(to_string(sys.kind)) +
                           " system");
    }
    ChebyshevReport report{ImplicationKind::Goguen, 0.0, {}, Attainability::Minimum};
    report.rows.reserve(sys.m());

    for (std::size_t j = 0; j < sys.m(); ++j) {
        RowDiagnostics row;
        row.one_minus_beta = 1.0 - sys.beta[j];
        double zeta_only = 1.0;
        for (std::size_t i = 0; i < sys.n(); ++i) {
            const GoguenCellStats c = goguen_cell(sys, j, i);
            const bool tie = std::abs(c.theta - c.zeta) <= kBorderlineTolerance;
            row.cells.push_back({c.theta, c.zeta, c.support, tie});
            if (!c.support) continue;
            assert(c.theta <= c.zeta + kDefaultTolerance);
            const double candidate = std::max(c.theta, c.zeta);
            if (candidate < row.tau) {
                row.tau = candidate;
                row.argmin_i = i;
            }
            zeta_only = std::min(zeta_only, c.zeta);
        }
        // theta <= zeta on supported cells, so both forms of tau coincide.
        assert(std::abs(row.tau - zeta_only) <= kDefaultTolerance);
        (void)zeta_only;
        row.nabla = std::min(row.one_minus_beta, row.tau);
        row.attainable = true;
        report.nabla = std::max(report.nabla, row.nabla);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace frecheb
