#include "frecheb/report.hpp"

#include "frecheb/godel.hpp"
#include "frecheb/goguen.hpp"
#include "frecheb/lukasiewicz.hpp"

namespace frecheb {

std::string_view to_string(Attainability a) {
    switch (a) {
        case Attainability::Minimum: return "minimum";
        case Attainability::Infimum: return "infimum";
        case Attainability::NotComputed: return "not_computed";
    }
    return "not_computed";
}

bool ChebyshevReport::borderline() const {
    for (const RowDiagnostics& row : rows)
        if (row.borderline && row.nabla >= nabla - kDefaultTolerance) return true;
    return false;
}

ChebyshevReport chebyshev_distance(const FuzzySystem& sys) {
    switch (sys.kind) {
        case ImplicationKind::Godel: return godel_nabla(sys);
        case ImplicationKind::Goguen: return goguen_nabla(sys);
        case ImplicationKind::Lukasiewicz: return luka_nabla(sys);
    }
    throw KindMismatch("unsupported implication");
}

}  // namespace frecheb
