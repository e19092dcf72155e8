#include "supercong/residue.hpp"
#include "supercong/error.hpp"

#include <limits>
#include <stdexcept>

namespace supercong {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

} // namespace

PrimePowerModulus::PrimePowerModulus(std::uint64_t p, unsigned k) : p_(p), k_(k), m_(1)
{
    if (!is_prime(p)) {
        throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    }
    if (k == 0) {
        throw Error(Errc::bad_range, "prime power exponent must be >= 1");
    }
    for (unsigned i = 0; i < k; ++i) {
        if (m_ > (kMaxModulus - 1) / p) {
            throw Error(Errc::modulus_too_large,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^63");
        }
        m_ *= p;
    }
}

Residue::Residue(const PrimePowerModulus& mod, std::int64_t v) : mod_(mod), value_(0)
{
    const auto m = static_cast<std::int64_t>(mod.m());
    std::int64_t r = v % m;
    if (r < 0) {
        r += m;
    }
    value_ = static_cast<std::uint64_t>(r);
}

Residue::Residue(const PrimePowerModulus& mod, const Integer& v) : mod_(mod), value_(v.mod(mod.m()))
{
}

Residue Residue::from_canonical(const PrimePowerModulus& mod, std::uint64_t v)
{
    if (v >= mod.m()) {
        throw std::out_of_range("residue value not canonical");
    }
    Residue r(mod);
    r.value_ = v;
    return r;
}

void Residue::require_same(const Residue& o) const
{
    if (!(mod_ == o.mod_)) {
        throw Error(Errc::modulus_mismatch, "residues modulo " + std::to_string(mod_.m()) + " and " +
                                                std::to_string(o.mod_.m()));
    }
}

Residue Residue::operator-() const
{
    Residue r(mod_);
    r.value_ = value_ == 0 ? 0 : mod_.m() - value_;
    return r;
}

Residue& Residue::operator+=(const Residue& o)
{
    require_same(o);
    const std::uint64_t m = mod_.m();
    value_ = value_ >= m - o.value_ ? value_ - (m - o.value_) : value_ + o.value_;
    return *this;
}

Residue& Residue::operator-=(const Residue& o)
{
    require_same(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (mod_.m() - o.value_);
    return *this;
}

Residue& Residue::operator*=(const Residue& o)
{
    require_same(o);
    value_ = mulmod(value_, o.value_, mod_.m());
    return *this;
}

Residue Residue::pow(std::uint64_t e) const
{
    Residue result(mod_, std::int64_t{1});
    Residue base = *this;
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        base *= base;
        e >>= 1U;
    }
    return result;
}

Residue Residue::inverse() const
{
    if (value_ % mod_.p() == 0) {
        throw Error(Errc::not_invertible,
                    std::to_string(value_) + " modulo " + std::to_string(mod_.m()));
    }
    // Extended Euclid on (value, m); coefficients stay below m in magnitude.
    __int128 old_r = value_, r = mod_.m();
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        const __int128 tr = old_r - q * r;
        old_r = r;
        r = tr;
        const __int128 ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    if (old_r != 1) {
        throw std::logic_error("gcd of unit and modulus is not 1");
    }
    const auto m = static_cast<__int128>(mod_.m());
    __int128 inv = old_s % m;
    if (inv < 0) {
        inv += m;
    }
    return from_canonical(mod_, static_cast<std::uint64_t>(inv));
}

Residue Residue::reduce(unsigned j) const
{
    if (j == 0 || j > mod_.k()) {
        throw Error(Errc::bad_range, "cannot reduce p^" + std::to_string(mod_.k()) + " residue to p^" +
                                         std::to_string(j));
    }
    const PrimePowerModulus target = mod_.with_power(j);
    return from_canonical(target, value_ % target.m());
}

Residue mod_inverse(const Integer& a, const PrimePowerModulus& m)
{
    return Residue(m, a).inverse();
}

Residue residue_of_rational(const Rational& q, const PrimePowerModulus& m)
{
    if (q.den().divisible_by(static_cast<unsigned long>(m.p()))) {
        throw Error(Errc::denominator_divisible_by_p,
                    q.to_string() + " modulo prime " + std::to_string(m.p()));
    }
    return Residue(m, q.num()) * mod_inverse(q.den(), m);
}

Residue fermat_quotient(const Integer& a, std::uint64_t p, unsigned k)
{
    if (p == 2 || !is_prime(p)) {
        throw Error(Errc::not_prime, std::to_string(p) + " is not an odd prime");
    }
    if (a.divisible_by(static_cast<unsigned long>(p))) {
        throw Error(Errc::p_divides_base, a.to_string() + " is divisible by " + std::to_string(p));
    }
    const PrimePowerModulus target(p, k);
    const Integer pk1 = Integer::pow(Integer(static_cast<unsigned long>(p)), k + 1);
    mpz_class power;
    mpz_powm_ui(power.get_mpz_t(), a.raw().get_mpz_t(), static_cast<unsigned long>(p - 1),
                pk1.raw().get_mpz_t());
    // a^{p-1} - 1 is divisible by p; divide_exact throws logic_error otherwise.
    const Integer numerator = Integer(std::move(power)) - Integer(1);
    return Residue(target, divide_exact(numerator, Integer(static_cast<unsigned long>(p))));
}

} // namespace supercong
