#include "inner_rates/matrix.hpp"

#include <utility>

namespace inner_rates {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational& RationalMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return data_[r * cols_ + c];
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return data_[r * cols_ + c];
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::leading_minor(std::size_t k) const {
    if (k > rows_ || k > cols_) throw std::out_of_range("minor larger than matrix");
    RationalMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.at(i, j) = at(i, j);
    return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!data_[i * cols_ + j].is_zero() && !x[j].is_zero()) acc += data_[i * cols_ + j] * x[j];
        }
        y[i] = std::move(acc);
    }
    return y;
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

Integer lcm(const Integer& a, const Integer& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

// Clears denominators row by row: row i of the result is d_i times row i of
// [m | extra], with d_i the lcm of that row's denominators.
IntegerRows to_integer_rows(const RationalMatrix& m, const RationalMatrix* extra,
                            Integer* scale_product) {
    const std::size_t n = m.rows();
    const std::size_t width = m.cols() + (extra ? extra->cols() : 0);
    IntegerRows rows(n, std::vector<Integer>(width));
    Integer product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer d = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m.at(i, j).denominator());
        if (extra)
            for (std::size_t j = 0; j < extra->cols(); ++j) d = lcm(d, extra->at(i, j).denominator());
        for (std::size_t j = 0; j < width; ++j) {
            const Rational& v = j < m.cols() ? m.at(i, j) : extra->at(i, j - m.cols());
            rows[i][j] = v.numerator() * (d / v.denominator());
        }
        product *= d;
    }
    if (scale_product) *scale_product = product;
    return rows;
}

// Fraction-free forward elimination on the first n columns. Every division
// is exact. Returns false when a zero column makes the system singular.
// With pivoting disabled the k-th pivot equals the k-th leading minor.
bool bareiss_eliminate(IntegerRows& a, std::size_t n, bool allow_pivoting, int& sign) {
    sign = 1;
    Integer previous = 1;
    const std::size_t width = a.empty() ? 0 : a[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            if (!allow_pivoting) return false;
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return false;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    return true;
}

RationalMatrix solve_many(const RationalMatrix& m, const RationalMatrix& rhs) {
    if (!m.is_square()) throw DimensionMismatch("solve requires a square matrix");
    if (rhs.rows() != m.rows()) throw DimensionMismatch("right-hand side has wrong length");
    const std::size_t n = m.rows();
    IntegerRows a = to_integer_rows(m, &rhs, nullptr);
    int sign = 1;
    if (!bareiss_eliminate(a, n, true, sign)) throw SingularMatrix();

    RationalMatrix x(n, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc(a[ii][n + c]);
            for (std::size_t j = ii + 1; j < n; ++j) {
                if (a[ii][j] != 0) acc -= Rational(a[ii][j]) * x.at(j, c);
            }
            x.at(ii, c) = acc / Rational(a[ii][ii]);
        }
    }
    return x;
}

}  // namespace

RationalVector solve_linear(const RationalMatrix& m, const RationalVector& b) {
    RationalMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    RationalMatrix x = solve_many(m, rhs);
    RationalVector out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i] = x.at(i, 0);
    return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
    return solve_many(m, RationalMatrix::identity(m.rows()));
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer scale;
    IntegerRows a = to_integer_rows(m, nullptr, &scale);
    int sign = 1;
    if (!bareiss_eliminate(a, n, true, sign)) return 0;
    return Rational(a[n - 1][n - 1] * sign, scale);
}

bool is_negative_definite(const RationalMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric();
    const std::size_t n = m.rows();
    // Row scales are positive, so minors keep their signs.
    IntegerRows a = to_integer_rows(m, nullptr, nullptr);
    int sign = 1;
    if (!bareiss_eliminate(a, n, false, sign)) return false;
    for (std::size_t k = 0; k < n; ++k) {
        const int expected = (k % 2 == 0) ? -1 : 1;  // order k+1
        if (a[k][k].sign() != expected) return false;
    }
    return true;
}

}  // namespace inner_rates
