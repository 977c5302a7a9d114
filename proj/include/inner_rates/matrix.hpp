#pragma once

#include "inner_rates/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace inner_rates {

using RationalVector = std::vector<Rational>;

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotSymmetric : public Error {
public:
    NotSymmetric() : Error("matrix is not symmetric") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Rational& at(std::size_t r, std::size_t c);
    const Rational& at(std::size_t r, std::size_t c) const;

    /// Top-left k x k block.
    RationalMatrix leading_minor(std::size_t k) const;

    RationalVector operator*(const RationalVector& x) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Exact solution of M x = b. Throws SingularMatrix when det M = 0.
RationalVector solve_linear(const RationalMatrix& m, const RationalVector& b);

/// Exact inverse, column by column through the same elimination.
RationalMatrix inverse(const RationalMatrix& m);

/// Fraction-free (Bareiss) determinant.
Rational determinant(const RationalMatrix& m);

/// Sylvester's criterion on -M: every leading principal minor of order k has
/// sign (-1)^k. Throws NotSymmetric.
bool is_negative_definite(const RationalMatrix& m);

}  // namespace inner_rates
