#include "inner_rates/rational.hpp"

#include <ostream>

namespace inner_rates {

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw DivisionByZero();
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g < 0) g = -g;
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> Integer {
        std::size_t i = 0;
        if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw Error("malformed rational: '" + std::string(text) + "'");
        for (std::size_t k = i; k < part.size(); ++k) {
            if (part[k] < '0' || part[k] > '9') {
                throw Error("malformed rational: '" + std::string(text) + "'");
            }
        }
        return Integer(std::string(part[0] == '+' ? part.substr(1) : part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw Error("malformed rational: '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(den_text));
}

Integer Rational::to_integer() const {
    if (den_ != 1) throw Error("rational " + str() + " is not an integer");
    return num_;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw DivisionByZero();
    Integer n = num_ * rhs.den_;
    Integer d = den_ * rhs.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace inner_rates
