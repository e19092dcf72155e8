#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supercong/integer.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// The modulus p^k for a prime p. Moduli are capped below 2^63 so residues
/// fit in one machine word and products fit in 128 bits.
class PrimePowerModulus {
public:
    /// Throws Error{not_prime} if p is not prime, Error{modulus_too_large}
    /// if p^k does not fit, Error{bad_range} if k == 0.
    PrimePowerModulus(std::uint64_t p, unsigned k);

    std::uint64_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint64_t m() const noexcept { return m_; }

    /// The same prime at a different exponent.
    PrimePowerModulus with_power(unsigned k) const { return PrimePowerModulus(p_, k); }

    friend bool operator==(const PrimePowerModulus&, const PrimePowerModulus&) = default;

private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t m_;
};

/// Canonical element of Z/p^k, value in [0, p^k).
class Residue {
public:
    explicit Residue(const PrimePowerModulus& mod) : mod_(mod), value_(0) {}
    Residue(const PrimePowerModulus& mod, std::int64_t v);
    Residue(const PrimePowerModulus& mod, const Integer& v);

    static Residue from_canonical(const PrimePowerModulus& mod, std::uint64_t v);

    std::uint64_t value() const noexcept { return value_; }
    const PrimePowerModulus& modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Residue operator-() const;
    Residue& operator+=(const Residue& o);
    Residue& operator-=(const Residue& o);
    Residue& operator*=(const Residue& o);
    Residue& operator*=(std::int64_t c) { return *this *= Residue(mod_, c); }

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator*(Residue a, std::int64_t c) { return a *= c; }
    friend Residue operator*(std::int64_t c, Residue a) { return a *= c; }

    Residue pow(std::uint64_t e) const;
    /// Throws Error{not_invertible} when p divides the value.
    Residue inverse() const;
    /// Image under Z/p^k -> Z/p^j for j <= k.
    Residue reduce(unsigned j) const;

    /// Two residues are equal when both modulus and canonical value agree.
    friend bool operator==(const Residue&, const Residue&) = default;

    std::string to_string() const { return std::to_string(value_); }

private:
    void require_same(const Residue& o) const;

    PrimePowerModulus mod_;
    std::uint64_t value_;
};

/// r with a*r = 1 (mod p^k); Error{not_invertible} if p | a.
Residue mod_inverse(const Integer& a, const PrimePowerModulus& m);

/// q.num * q.den^{-1} mod p^k; Error{denominator_divisible_by_p} if p | q.den.
Residue residue_of_rational(const Rational& q, const PrimePowerModulus& m);

/// Fermat quotient (a^{p-1} - 1)/p reduced mod p^k. Computed from a^{p-1}
/// mod p^{k+1} followed by exact division by p. Error{p_divides_base} if
/// p | a; Error{not_prime} if p is not an odd prime.
Residue fermat_quotient(const Integer& a, std::uint64_t p, unsigned k);

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Primes in [lo, hi] ascending. Error{bad_range} if lo > hi or lo < 2.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

} // namespace supercong
