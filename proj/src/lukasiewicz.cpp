#include "frecheb/lukasiewicz.hpp"

#include <algorithm>
#include <string>

namespace frecheb {

double l_func(double u, double v, double x, double y) {
    return std::max(positive_part(u - y),
                    std::min(positive_part(x - v), positive_part(x - y + u - v) / 2.0));
}

LukaCellStats luka_cell(const FuzzySystem& sys, std::size_t j, std::size_t i) {
    if (j >= sys.m() || i >= sys.n()) {
        throw IndexOutOfRange("cell (" + std::to_string(j) + "," + std::to_string(i) +
                              ") outside " + std::to_string(sys.m()) + "x" +
                              std::to_string(sys.n()) + " system");
    }
    const auto& g = sys.gamma;
    const auto& b = sys.beta;
    double zeta = 0.0;
    for (std::size_t l = 0; l < sys.m(); ++l)
        zeta = std::max(zeta, l_func(1.0 - g(j, i), 1.0 - g(l, i), b[l], b[j]));
    return {zeta};
}

ChebyshevReport luka_nabla(const FuzzySystem& sys) {
    if (sys.kind != ImplicationKind::Lukasiewicz) {
        throw KindMismatch("luka_nabla called on a " + std::string(to_string(sys.kind)) +
                           " system");
    }
    ChebyshevReport report{ImplicationKind::Lukasiewicz, 0.0, {}, Attainability::Minimum};
    report.rows.reserve(sys.m());

    for (std::size_t j = 0; j < sys.m(); ++j) {
        RowDiagnostics row;
        row.one_minus_beta = 1.0 - sys.beta[j];
        row.tau = 1.0;
        for (std::size_t i = 0; i < sys.n(); ++i) {
            const LukaCellStats c = luka_cell(sys, j, i);
            row.cells.push_back({std::nullopt, c.zeta, sys.gamma(j, i) > 0.0, false});
            if (!row.argmin_i || c.zeta < row.tau) {
                row.tau = c.zeta;
                row.argmin_i = i;
            }
        }
        row.nabla = std::min(row.one_minus_beta, row.tau);
        row.attainable = true;
        report.nabla = std::max(report.nabla, row.nabla);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace frecheb
