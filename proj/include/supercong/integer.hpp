#pragma once

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supercong {

/// Arbitrary-precision signed integer backed by GMP.
class Integer {
public:
    Integer() = default;
    Integer(int v) : z_(static_cast<long>(v)) {}
    Integer(long v) : z_(v) {}
    Integer(long long v) : z_(static_cast<long>(v)) {}
    Integer(unsigned v) : z_(static_cast<unsigned long>(v)) {}
    Integer(unsigned long v) : z_(v) {}
    Integer(unsigned long long v) : z_(static_cast<unsigned long>(v)) {}
    explicit Integer(mpz_class z) : z_(std::move(z)) {}
    explicit Integer(std::string_view decimal);

    static Integer pow(const Integer& base, unsigned long exp);
    static Integer pow(long base, unsigned long exp);

    int sign() const noexcept { return mpz_sgn(z_.get_mpz_t()); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_odd() const noexcept { return mpz_odd_p(z_.get_mpz_t()) != 0; }
    bool divisible_by(const Integer& d) const;
    bool divisible_by(unsigned long d) const;
    bool fits_int64() const noexcept;
    std::int64_t to_int64() const;
    /// Non-negative remainder modulo m (m > 0).
    std::uint64_t mod(std::uint64_t m) const;
    std::size_t bit_length() const noexcept;

    std::string to_string() const { return z_.get_str(10); }
    const mpz_class& raw() const noexcept { return z_; }

    Integer operator-() const { return Integer(mpz_class(-z_)); }
    Integer abs() const
    {
        mpz_class r;
        mpz_abs(r.get_mpz_t(), z_.get_mpz_t());
        return Integer(std::move(r));
    }

    Integer& operator+=(const Integer& o) { z_ += o.z_; return *this; }
    Integer& operator-=(const Integer& o) { z_ -= o.z_; return *this; }
    Integer& operator*=(const Integer& o) { z_ *= o.z_; return *this; }
    /// Truncating division.
    Integer& operator/=(const Integer& o);
    Integer& operator%=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b)
    {
        return cmp(a.z_, b.z_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.z_; }

private:
    mpz_class z_;
};

Integer gcd(const Integer& a, const Integer& b);

/// a / b where b must divide a; a non-exact quotient is an arithmetic bug and
/// throws std::logic_error.
Integer divide_exact(const Integer& a, const Integer& b);

} // namespace supercong
