#include "frecheb/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace frecheb {

std::string_view to_string(ImplicationKind kind) {
    switch (kind) {
        case ImplicationKind::Godel: return "godel";
        case ImplicationKind::Goguen: return "goguen";
        case ImplicationKind::Lukasiewicz: return "lukasiewicz";
    }
    return "unknown";
}

ImplicationKind parse_implication(std::string_view tag) {
    if (tag == "godel") return ImplicationKind::Godel;
    if (tag == "goguen") return ImplicationKind::Goguen;
    if (tag == "lukasiewicz") return ImplicationKind::Lukasiewicz;
    throw DomainError("unknown implication '" + std::string(tag) +
                      "' (expected godel, goguen or lukasiewicz)");
}

double checked_unit(double v) {
    if (std::isnan(v)) throw DomainError("membership degree is NaN");
    if (v < -kClampSlack || v > 1.0 + kClampSlack) {
        throw DomainError("membership degree " + std::to_string(v) + " outside [0,1]");
    }
    return std::clamp(v, 0.0, 1.0);
}

UnitValue::UnitValue(double v) : v_(checked_unit(v)) {}

UnitVector::UnitVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionMismatch("vector must have at least one entry");
    for (double& e : entries_) e = checked_unit(e);
}

UnitVector::UnitVector(std::initializer_list<double> entries)
    : UnitVector(std::vector<double>(entries)) {}

UnitVector UnitVector::filled(std::size_t size, double value) {
    return UnitVector(std::vector<double>(size, value));
}

double UnitVector::at(std::size_t i) const {
    if (i >= entries_.size()) {
        throw IndexOutOfRange("vector index " + std::to_string(i) + " >= size " +
                              std::to_string(entries_.size()));
    }
    return entries_[i];
}

UnitMatrix::UnitMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix must be at least 1x1");
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix entry count " + std::to_string(entries_.size()) +
                                " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    for (double& e : entries_) e = checked_unit(e);
}

namespace {

std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows,
                            std::size_t& cols) {
    std::vector<double> out;
    cols = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

}  // namespace

UnitMatrix::UnitMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(0), entries_(flatten(rows, cols_)) {
    if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix must be at least 1x1");
    for (double& e : entries_) e = checked_unit(e);
}

double UnitMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                              ") outside " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
    }
    return (*this)(r, c);
}

std::span<const double> UnitMatrix::row(std::size_t r) const {
    return std::span<const double>(entries_).subspan(r * cols_, cols_);
}

UnitMatrix UnitMatrix::transposed() const {
    std::vector<double> t(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = entries_[r * cols_ + c];
    return UnitMatrix(cols_, rows_, std::move(t));
}

double t_norm_raw(ImplicationKind kind, double x, double y) {
    switch (kind) {
        case ImplicationKind::Godel: return std::min(x, y);
        case ImplicationKind::Goguen: return x * y;
        case ImplicationKind::Lukasiewicz: return positive_part(x + y - 1.0);
    }
    return 0.0;
}

double residuum_raw(ImplicationKind kind, double x, double y) {
    switch (kind) {
        case ImplicationKind::Godel: return x <= y ? 1.0 : y;
        // x > y >= 0 on the second branch, so the division is safe.
        case ImplicationKind::Goguen: return x <= y ? 1.0 : y / x;
        case ImplicationKind::Lukasiewicz: return std::min(1.0 - x + y, 1.0);
    }
    return 1.0;
}

UnitValue t_norm(ImplicationKind kind, UnitValue x, UnitValue y) {
    return UnitValue(t_norm_raw(kind, x, y));
}

UnitValue residuum(ImplicationKind kind, UnitValue x, UnitValue y) {
    return UnitValue(residuum_raw(kind, x, y));
}

UnitVector max_t_compose(const UnitMatrix& m, ImplicationKind kind, const UnitVector& v) {
    if (m.cols() != v.size()) {
        throw DimensionMismatch("max-T composition: matrix has " + std::to_string(m.cols()) +
                                " columns but vector has " + std::to_string(v.size()) +
                                " entries");
    }
    std::vector<double> out(m.rows(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc = std::max(acc, t_norm_raw(kind, m(r, c), v[c]));
        out[r] = acc;
    }
    return UnitVector(std::move(out));
}

UnitVector min_impl_compose(const UnitMatrix& m, ImplicationKind kind, const UnitVector& v) {
    if (m.cols() != v.size()) {
        throw DimensionMismatch("min-implication composition: matrix has " +
                                std::to_string(m.cols()) + " columns but vector has " +
                                std::to_string(v.size()) + " entries");
    }
    std::vector<double> out(m.rows(), 1.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double acc = 1.0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc = std::min(acc, residuum_raw(kind, m(r, c), v[c]));
        out[r] = acc;
    }
    return UnitVector(std::move(out));
}

UnitVector lower_shift(const UnitVector& v, double delta) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = positive_part(v[i] - delta);
    return UnitVector(std::move(out));
}

UnitVector upper_shift(const UnitVector& v, double delta) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::min(v[i] + delta, 1.0);
    return UnitVector(std::move(out));
}

ShiftedBounds shifted_bounds(const UnitVector& v, UnitValue delta) {
    return {lower_shift(v, delta), upper_shift(v, delta)};
}

double chebyshev_norm(const UnitVector& a, const UnitVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("norm of vectors with different sizes");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

bool leq(const UnitVector& a, const UnitVector& b, double slack) {
    if (a.size() != b.size()) throw DimensionMismatch("comparison of vectors with different sizes");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i] + slack) return false;
    return true;
}

}  // namespace frecheb
