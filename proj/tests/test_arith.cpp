#include <doctest.h>

#include <random>

#include "exact_oracle.hpp"
#include "supercong/error.hpp"
#include "supercong/rational.hpp"
#include "supercong/residue.hpp"

using namespace supercong;

namespace {

Errc code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected supercong::Error");
    return Errc::unknown_id;
}

// Schoolbook fractions on long long; inputs kept small enough not to overflow.
struct Frac {
    long long n, d;
};

long long ll_gcd(long long a, long long b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Frac make(long long n, long long d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = ll_gcd(n, d);
    return g == 0 ? Frac{0, 1} : Frac{n / g, d / g};
}

bool same(const Rational& q, const Frac& f)
{
    return q.num() == Integer(f.n) && q.den() == Integer(f.d);
}

} // namespace

TEST_CASE("Integer basics")
{
    CHECK(Integer(0).sign() == 0);
    CHECK(Integer(-7).sign() == -1);
    CHECK(Integer("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK(Integer::pow(2, 100).to_string() == "1267650600228229401496703205376");
    CHECK(Integer(-7).mod(5) == 3);
    CHECK(divide_exact(Integer(91), Integer(7)) == Integer(13));
    CHECK_THROWS_AS(divide_exact(Integer(10), Integer(3)), std::logic_error);
    CHECK(Integer(-7) / Integer(2) == Integer(-3));
}

TEST_CASE("Rational is kept reduced with positive denominator")
{
    const Rational q(Integer(6), Integer(-4));
    CHECK(q.num() == Integer(-3));
    CHECK(q.den() == Integer(2));
    CHECK_FALSE(q.is_integer());
    CHECK(Rational(Integer(8), Integer(4)).is_integer());
    CHECK(Rational(Integer(0), Integer(-5)).den() == Integer(1));
    CHECK(q.to_string() == "-3/2");
    CHECK(code_of([] { Rational(Integer(1), Integer(0)); }) == Errc::division_by_zero);
}

TEST_CASE("Rational arithmetic agrees with schoolbook fractions")
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long long> num(-999, 999);
    std::uniform_int_distribution<long long> den(1, 999);
    for (int trial = 0; trial < 2000; ++trial) {
        const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational x{Integer(a), Integer(b)};
        const Rational y{Integer(c), Integer(d)};
        REQUIRE(same(x + y, make(a * d + c * b, b * d)));
        REQUIRE(same(x * y, make(a * c, b * d)));
        REQUIRE(same(-x, make(-a, b)));
        REQUIRE(same(x - y, make(a * d - c * b, b * d)));
        REQUIRE(((x < y) == (a * d < c * b)));
    }
}

TEST_CASE("Rational decimal conversion")
{
    CHECK(Rational(Integer(1), Integer(3)).to_scientific(5) == "3.3333e-01");
    CHECK(Rational(Integer(2), Integer(3)).to_scientific(5) == "6.6667e-01");
    CHECK(Rational(Integer(-1000)).to_scientific(3) == "-1.00e+03");
    CHECK(Rational(Integer(999999), Integer(1000000)).to_scientific(3) == "1.00e+00");
    CHECK(Rational(Integer(1), Integer::pow(10, 400)).to_scientific(2) == "1.0e-400");
    CHECK(Rational(Integer(1), Integer(3)).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-16));
    CHECK(Rational(Integer(1), Integer::pow(2, 5000)).to_double() == 0.0);
}

TEST_CASE("PrimePowerModulus validation")
{
    const PrimePowerModulus m(5, 4);
    CHECK(m.m() == 625);
    CHECK(code_of([] { PrimePowerModulus(6, 1); }) == Errc::not_prime);
    CHECK(code_of([] { PrimePowerModulus(5, 0); }) == Errc::bad_range);
    CHECK(code_of([] { PrimePowerModulus(1000003, 4); }) == Errc::modulus_too_large);
}

TEST_CASE("mod_inverse")
{
    const PrimePowerModulus m(5, 4);
    CHECK(mod_inverse(Integer(1), m).value() == 1);
    CHECK(mod_inverse(Integer(32), m).value() == 293);
    CHECK(code_of([&] { mod_inverse(Integer(5), m); }) == Errc::not_invertible);
    CHECK(mod_inverse(Integer(-1), m).value() == 624);
}

TEST_CASE("mod_inverse property: a * inverse(a) == 1")
{
    std::mt19937_64 rng(7);
    for (const std::uint64_t p : {5ULL, 7ULL, 11ULL, 499ULL, 997ULL}) {
        const PrimePowerModulus m(p, 4);
        std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
        for (int t = 0; t < 300; ++t) {
            const Integer a(dist(rng));
            if (a.divisible_by(static_cast<unsigned long>(p))) {
                continue;
            }
            REQUIRE((Residue(m, a) * mod_inverse(a, m)).value() == 1);
        }
    }
}

TEST_CASE("residue_of_rational")
{
    CHECK(residue_of_rational(Rational(Integer(3), Integer(2)), PrimePowerModulus(5, 1)).value() == 4);
    CHECK(residue_of_rational(Rational(Integer(-1), Integer(2)), PrimePowerModulus(5, 1)).value() == 2);
    CHECK(residue_of_rational(Rational(7), PrimePowerModulus(7, 2)).value() == 7);
    CHECK(code_of([] { residue_of_rational(Rational(Integer(1), Integer(10)), PrimePowerModulus(5, 2)); }) ==
          Errc::denominator_divisible_by_p);
}

TEST_CASE("residue_of_rational is a ring homomorphism on p-integral rationals")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> num(-100000, 100000);
    std::uniform_int_distribution<long long> den(1, 100000);
    const PrimePowerModulus m(13, 4);
    int tested = 0;
    while (tested < 1000) {
        const long long b = den(rng), d = den(rng);
        if (b % 13 == 0 || d % 13 == 0) {
            continue;
        }
        const Rational x(Integer(num(rng)), Integer(b));
        const Rational y(Integer(num(rng)), Integer(d));
        REQUIRE(residue_of_rational(x + y, m) == residue_of_rational(x, m) + residue_of_rational(y, m));
        REQUIRE(residue_of_rational(x * y, m) == residue_of_rational(x, m) * residue_of_rational(y, m));
        ++tested;
    }
}

TEST_CASE("Residue arithmetic and reduction")
{
    const PrimePowerModulus m(7, 3);
    const Residue a(m, std::int64_t{-1});
    CHECK(a.value() == 342);
    CHECK((a + Residue(m, std::int64_t{1})).is_zero());
    CHECK((-a).value() == 1);
    CHECK(Residue(m, std::int64_t{3}).pow(6).value() == 729 % 343);
    CHECK(a.reduce(1).value() == 6);
    CHECK(a.reduce(1).modulus().m() == 7);
    CHECK(code_of([&] { (void)(a + Residue(PrimePowerModulus(7, 2), std::int64_t{1})); }) ==
          Errc::modulus_mismatch);
    CHECK(code_of([&] { (void)a.reduce(4); }) == Errc::bad_range);
}

TEST_CASE("fermat_quotient")
{
    CHECK(fermat_quotient(Integer(2), 5, 1).value() == 3);
    CHECK(fermat_quotient(Integer(1), 7, 2).value() == 0);
    CHECK(fermat_quotient(Integer(2), 7, 1).value() == 2);
    CHECK(code_of([] { fermat_quotient(Integer(14), 7, 1); }) == Errc::p_divides_base);
    CHECK(code_of([] { fermat_quotient(Integer(3), 2, 1); }) == Errc::not_prime);
    CHECK(code_of([] { fermat_quotient(Integer(3), 9, 1); }) == Errc::not_prime);
}

TEST_CASE("fermat_quotient is coherent across powers")
{
    for (const std::uint64_t p : oracle::sieve_primes(3, 200)) {
        for (const long a : {2L, 3L, -5L, 10L, 123456789L}) {
            if (a % static_cast<long>(p) == 0) {
                continue;
            }
            for (unsigned k = 2; k <= 4; ++k) {
                REQUIRE(fermat_quotient(Integer(a), p, k).reduce(k - 1) == fermat_quotient(Integer(a), p, k - 1));
            }
            // Against the exact integer quotient.
            const Integer exact = divide_exact(Integer::pow(a, p - 1) - Integer(1), Integer(p));
            REQUIRE(fermat_quotient(Integer(a), p, 3) == Residue(PrimePowerModulus(p, 3), exact));
        }
    }
}

TEST_CASE("primes_in_range")
{
    CHECK(primes_in_range(5, 20) == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19});
    CHECK(primes_in_range(24, 28).empty());
    CHECK(primes_in_range(2, 2) == std::vector<std::uint64_t>{2});
    CHECK(code_of([] { primes_in_range(20, 5); }) == Errc::bad_range);
    CHECK(primes_in_range(2, 10000) == oracle::sieve_primes(2, 10000));
    CHECK(primes_in_range(5, 499).size() == 93);
}
