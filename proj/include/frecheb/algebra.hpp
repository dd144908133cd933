#pragma once

/**
 * @file algebra.hpp
 * @brief Scalar algebra on the unit interval and the two matrix-vector
 *        compositions built on it.
 *
 * Three t-norms are supported, each paired with its residuated implication:
 *
 *   Godel        T(x,y) = min(x,y)        I(x,y) = 1 if x <= y else y
 *   Goguen       T(x,y) = x*y             I(x,y) = 1 if x <= y else y/x
 *   Lukasiewicz  T(x,y) = (x+y-1)^+       I(x,y) = min(1-x+y, 1)
 *
 * Branch points of the implications are compared exactly; they are genuine
 * discontinuities and blurring them changes the answers downstream.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "frecheb/errors.hpp"

namespace frecheb {

enum class ImplicationKind { Godel, Goguen, Lukasiewicz };

std::string_view to_string(ImplicationKind kind);

/// Parses "godel", "goguen" or "lukasiewicz"; throws DomainError otherwise.
ImplicationKind parse_implication(std::string_view tag);

/// Values this close outside [0,1] are clamped instead of rejected.
inline constexpr double kClampSlack = 1e-12;

/// A membership degree in [0,1].
class UnitValue {
public:
    constexpr UnitValue() = default;

    /// Throws DomainError for NaN or values further than kClampSlack outside [0,1].
    explicit UnitValue(double v);

    constexpr double value() const { return v_; }
    constexpr operator double() const { return v_; }

private:
    double v_ = 0.0;
};

/// Clamp-or-throw used by every validated constructor.
double checked_unit(double v);

/// Non-empty column vector of membership degrees.
class UnitVector {
public:
    explicit UnitVector(std::vector<double> entries);
    UnitVector(std::initializer_list<double> entries);

    static UnitVector filled(std::size_t size, double value);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    double at(std::size_t i) const;
    std::span<const double> values() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const UnitVector&, const UnitVector&) = default;

private:
    std::vector<double> entries_;
};

/// Row-major matrix of membership degrees, at least 1x1.
class UnitMatrix {
public:
    UnitMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    UnitMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const;
    std::span<const double> row(std::size_t r) const;
    std::span<const double> values() const { return entries_; }

    UnitMatrix transposed() const;

    friend bool operator==(const UnitMatrix&, const UnitMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// x^+ = max(x, 0)
constexpr double positive_part(double x) { return x > 0.0 ? x : 0.0; }

double t_norm_raw(ImplicationKind kind, double x, double y);
double residuum_raw(ImplicationKind kind, double x, double y);

UnitValue t_norm(ImplicationKind kind, UnitValue x, UnitValue y);

/// Largest z with T(x,z) <= y.
UnitValue residuum(ImplicationKind kind, UnitValue x, UnitValue y);

/// out_i = max_j T(m_ij, v_j)
UnitVector max_t_compose(const UnitMatrix& m, ImplicationKind kind, const UnitVector& v);

/// out_j = min_i I(m_ji, v_i)
UnitVector min_impl_compose(const UnitMatrix& m, ImplicationKind kind, const UnitVector& v);

struct ShiftedBounds {
    UnitVector lower;  ///< (v_i - delta)^+
    UnitVector upper;  ///< min(v_i + delta, 1)
};

/// ||v - c|| <= delta  iff  lower <= c <= upper.
ShiftedBounds shifted_bounds(const UnitVector& v, UnitValue delta);

UnitVector lower_shift(const UnitVector& v, double delta);
UnitVector upper_shift(const UnitVector& v, double delta);

/// max_i |a_i - b_i|
double chebyshev_norm(const UnitVector& a, const UnitVector& b);

/// a_i <= b_i + slack for every i.
bool leq(const UnitVector& a, const UnitVector& b, double slack = 0.0);

}  // namespace frecheb
