#include "supercong/rational.hpp"
#include "supercong/error.hpp"

#include <cstdlib>

namespace supercong {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw Error(Errc::division_by_zero, "Rational with zero denominator");
    }
    normalize();
}

void Rational::normalize()
{
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    const Integer g = gcd(num_, den_);
    if (g != Integer(1)) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
}

Rational Rational::operator-() const
{
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const
{
    if (num_.is_zero()) {
        throw Error(Errc::division_by_zero, "inverse of zero");
    }
    return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

std::string Rational::to_string() const
{
    if (is_integer()) {
        return num_.to_string();
    }
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_scientific(int digits) const
{
    if (digits < 1) {
        digits = 1;
    }
    if (num_.is_zero()) {
        return "0e+00";
    }
    const Integer a = num_.abs();
    // Decimal exponent estimate from bit lengths, corrected below.
    const auto bits = static_cast<long>(a.bit_length()) - static_cast<long>(den_.bit_length());
    long e = static_cast<long>(static_cast<double>(bits) * 0.30102999566398120) - 1;

    const Integer lo = Integer::pow(10, static_cast<unsigned long>(digits));
    const Integer hi = lo * Integer(10);
    // scaled = floor(a/den * 10^(digits - e)) with one extra guard digit for rounding.
    auto scaled = [&](long exp10) {
        Integer n = a * Integer(10);
        Integer d = den_;
        const long shift = digits - 1 - exp10;
        if (shift >= 0) {
            n *= Integer::pow(10, static_cast<unsigned long>(shift));
        } else {
            d *= Integer::pow(10, static_cast<unsigned long>(-shift));
        }
        return n / d;
    };
    Integer s = scaled(e);
    while (s >= hi) {
        ++e;
        s = scaled(e);
    }
    while (s < lo) {
        --e;
        s = scaled(e);
    }
    // s has digits+1 digits; round half up on the guard digit.
    Integer mant = s / Integer(10);
    if (s % Integer(10) >= Integer(5)) {
        mant += Integer(1);
        if (mant == lo) {
            mant = lo / Integer(10);
            ++e;
        }
    }
    std::string m = mant.to_string();
    std::string out;
    if (num_.sign() < 0) {
        out += '-';
    }
    out += m.substr(0, 1);
    if (m.size() > 1) {
        out += '.';
        out += m.substr(1);
    }
    out += 'e';
    out += e < 0 ? '-' : '+';
    const std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2) {
        out += '0';
    }
    out += es;
    return out;
}

double Rational::to_double() const { return std::strtod(to_scientific(30).c_str(), nullptr); }

} // namespace supercong
