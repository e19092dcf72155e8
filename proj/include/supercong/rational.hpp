#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "supercong/integer.hpp"

namespace supercong {

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(const Integer& v) : num_(v), den_(1) {}
    Rational(Integer num, Integer den);

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }
    bool is_integer() const { return den_ == Integer(1); }
    int sign() const noexcept { return num_.sign(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    /// Scientific notation "[-]d.ddd…e[+-]x" with `digits` significant digits,
    /// obtained by exact integer division and round-half-up on the last digit.
    std::string to_scientific(int digits) const;

    /// Nearest double, via a 30-significant-digit exact decimal expansion.
    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    void normalize();

    Integer num_;
    Integer den_;
};

} // namespace supercong
