#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace inner_rates {

using Integer = boost::multiprecision::cpp_int;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/*
 * Exact rational number over arbitrary precision integers.
 *
 * Always kept in lowest terms with a strictly positive denominator, so two
 * equal values have identical representations and comparison is structural.
 */
class Rational {
public:
    Rational() = default;
    Rational(int value) : num_(value) {}  // NOLINT: implicit by intent
    Rational(long long value) : num_(value) {}  // NOLINT
    Rational(Integer value) : num_(std::move(value)) {}  // NOLINT
    Rational(Integer numerator, Integer denominator);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    /// Only valid when is_integer().
    Integer to_integer() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    Integer num_{0};
    Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

}  // namespace inner_rates
