#include "frecheb/godel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace frecheb {

namespace {

void require_cell(const FuzzySystem& sys, std::size_t j, std::size_t i) {
    if (j >= sys.m() || i >= sys.n()) {
        throw IndexOutOfRange("cell (" + std::to_string(j) + "," + std::to_string(i) +
                              ") outside " + std::to_string(sys.m()) + "x" +
                              std::to_string(sys.n()) + " system");
    }
}

}  // namespace

double sigma_g(double x, double y, double z) {
    return std::min(positive_part(x - z) / 2.0, positive_part(y - z));
}

GodelCellStats godel_cell(const FuzzySystem& sys, std::size_t j, std::size_t i) {
    require_cell(sys, j, i);
    const auto& g = sys.gamma;
    const auto& b = sys.beta;
    const double gji = g(j, i);

    // l = j always satisfies gamma_ji <= gamma_li, so theta is never a max over nothing.
    double theta = b[j] - gji;
    double zeta = 0.0;
    for (std::size_t l = 0; l < sys.m(); ++l) {
        if (gji <= g(l, i)) theta = std::max(theta, b[l] - gji);
        zeta = std::max(zeta, sigma_g(b[l], g(l, i), b[j]));
    }
    return {theta, zeta, gji > 0.0, std::abs(theta - zeta) <= kBorderlineTolerance};
}

ChebyshevReport godel_nabla(const FuzzySystem& sys) {
    if (sys.kind != ImplicationKind::Godel) {
        throw KindMismatch("godel_nabla called on a " + std::string(to_string(sys.kind)) +
                           " system");
    }
    constexpr double tol = kDefaultTolerance;

    ChebyshevReport report{ImplicationKind::Godel, 0.0, {}, Attainability::NotComputed};
    report.rows.reserve(sys.m());

    for (std::size_t j = 0; j < sys.m(); ++j) {
        RowDiagnostics row;
        row.one_minus_beta = 1.0 - sys.beta[j];
        double tilde = 1.0;
        for (std::size_t i = 0; i < sys.n(); ++i) {
            const GodelCellStats c = godel_cell(sys, j, i);
            row.cells.push_back({c.theta, c.zeta, c.support, c.borderline});
            if (!c.support) continue;
            const double candidate = std::max(c.theta, c.zeta);
            if (candidate < row.tau) {
                row.tau = candidate;
                row.argmin_i = i;
            }
            if (c.theta < c.zeta) tilde = std::min(tilde, c.zeta);
        }
        // Supported cells have theta <= 1 - gamma_ji < 1 and zeta <= 1/2, so argmin_i
        // is set whenever A_j is non-empty.
        row.nabla_tilde = tilde;
        row.nabla = std::min(row.one_minus_beta, row.tau);
        row.attainable = std::abs(row.nabla - row.one_minus_beta) <= tol ||
                         std::abs(row.nabla - tilde) <= tol;

        if (row.nabla < row.one_minus_beta - tol) {
            for (std::size_t i = 0; i < sys.n(); ++i) {
                const CellStats& c = row.cells[i];
                if (c.support && c.borderline && c.zeta <= row.nabla + tol) row.borderline = true;
            }
        }
        report.nabla = std::max(report.nabla, row.nabla);
        report.rows.push_back(std::move(row));
    }

    bool attained = true;
    for (const RowDiagnostics& row : report.rows) {
        if (row.nabla >= report.nabla - tol && !row.attainable) attained = false;
    }
    report.verdict = attained ? Attainability::Minimum : Attainability::Infimum;
    return report;
}

}  // namespace frecheb
