#include "supercong/integer.hpp"
#include "supercong/error.hpp"

#include <limits>
#include <stdexcept>

namespace supercong {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::not_invertible: return "NotInvertible";
    case Errc::denominator_divisible_by_p: return "DenominatorDivisibleByP";
    case Errc::p_divides_base: return "PDividesBase";
    case Errc::bad_range: return "BadRange";
    case Errc::not_prime: return "NotPrime";
    case Errc::p_too_small: return "PTooSmall";
    case Errc::index_reaches_p: return "IndexReachesP";
    case Errc::bad_index: return "BadIndex";
    case Errc::even_n: return "EvenN";
    case Errc::not_integer: return "NotInteger";
    case Errc::not_positive: return "NotPositive";
    case Errc::modulus_mismatch: return "ModulusMismatch";
    case Errc::modulus_too_large: return "ModulusTooLarge";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::unknown_id: return "UnknownId";
    }
    return "Unknown";
}

Integer::Integer(std::string_view decimal)
{
    if (z_.set_str(std::string(decimal), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: " + std::string(decimal));
    }
}

Integer Integer::pow(const Integer& base, unsigned long exp)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.z_.get_mpz_t(), exp);
    return Integer(std::move(r));
}

Integer Integer::pow(long base, unsigned long exp) { return pow(Integer(base), exp); }

bool Integer::divisible_by(const Integer& d) const
{
    return mpz_divisible_p(z_.get_mpz_t(), d.z_.get_mpz_t()) != 0;
}

bool Integer::divisible_by(unsigned long d) const
{
    return mpz_divisible_ui_p(z_.get_mpz_t(), d) != 0;
}

bool Integer::fits_int64() const noexcept
{
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_fits_slong_p(z_.get_mpz_t()) != 0;
}

std::int64_t Integer::to_int64() const
{
    if (!fits_int64()) {
        throw std::overflow_error("Integer does not fit in int64: " + to_string());
    }
    return mpz_get_si(z_.get_mpz_t());
}

std::uint64_t Integer::mod(std::uint64_t m) const
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    if (m == 0) {
        throw Error(Errc::division_by_zero, "modulus 0");
    }
    return mpz_fdiv_ui(z_.get_mpz_t(), m);
}

std::size_t Integer::bit_length() const noexcept
{
    return is_zero() ? 0 : mpz_sizeinbase(z_.get_mpz_t(), 2);
}

Integer& Integer::operator/=(const Integer& o)
{
    if (o.is_zero()) {
        throw Error(Errc::division_by_zero, "Integer division");
    }
    mpz_tdiv_q(z_.get_mpz_t(), z_.get_mpz_t(), o.z_.get_mpz_t());
    return *this;
}

Integer& Integer::operator%=(const Integer& o)
{
    if (o.is_zero()) {
        throw Error(Errc::division_by_zero, "Integer remainder");
    }
    mpz_tdiv_r(z_.get_mpz_t(), z_.get_mpz_t(), o.z_.get_mpz_t());
    return *this;
}

Integer gcd(const Integer& a, const Integer& b)
{
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer divide_exact(const Integer& a, const Integer& b)
{
    if (b.is_zero()) {
        throw Error(Errc::division_by_zero, "exact division");
    }
    if (!a.divisible_by(b)) {
        throw std::logic_error("inexact division: " + a.to_string() + " / " + b.to_string());
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

} // namespace supercong
