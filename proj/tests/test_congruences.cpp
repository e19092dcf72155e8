#include <doctest.h>

#include "exact_oracle.hpp"
#include "supercong/congruences.hpp"
#include "supercong/error.hpp"
#include "supercong/sequences.hpp"

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

const std::vector<CongruenceId> kAll(std::begin(kAllCongruences), std::end(kAllCongruences));

} // namespace

TEST_CASE("congruence ids and powers")
{
    for (const CongruenceId id : kAll) {
        REQUIRE(parse_congruence_id(to_string(id)) == id);
    }
    CHECK(required_power(CongruenceId::thm1) == 4);
    CHECK(required_power(CongruenceId::b3) == 1);
    CHECK(required_power(CongruenceId::b5) == 2);
    CHECK(required_power(CongruenceId::c10) == 3);
    CHECK(required_power(CongruenceId::c12) == 4);
    CHECK(required_power(CongruenceId::c12_input) == 3);
}

TEST_CASE("thm1 residues at small primes")
{
    const auto five = verify_thm1(5);
    CHECK(five.holds);
    CHECK(five.modulus().m() == 625);
    CHECK(five.lhs.value() == 505);
    CHECK(five.rhs.value() == 505);
    const auto seven = verify_thm1(7);
    CHECK(seven.lhs.value() == 1708);
    CHECK(seven.rhs.value() == 1708);
    CHECK(code_of([] { verify_thm1(3); }) == Errc::p_too_small);
    CHECK(code_of([] { verify_thm1(9); }) == Errc::not_prime);
}

TEST_CASE("thm2 residues at small primes")
{
    const auto five = verify_thm2(5);
    CHECK(five.lhs.value() == 510);
    CHECK(five.rhs.value() == 510);
    const auto seven = verify_thm2(7);
    CHECK(seven.lhs.value() == 672);
    CHECK(seven.holds);
    CHECK(code_of([] { verify_thm2(4); }) == Errc::not_prime);
}

TEST_CASE("lemma examples")
{
    const auto b3 = verify_lemma(CongruenceId::b3, 5);
    CHECK(b3.lhs.value() == 3);
    CHECK(b3.rhs.value() == 3);
    const auto b11 = verify_lemma(CongruenceId::b11, 5);
    CHECK(b11.lhs.value() == 14);
    CHECK(b11.rhs.value() == 14);
    CHECK(b11.modulus().m() == 25);
    const auto b8 = verify_lemma(CongruenceId::b8, 5);
    CHECK(b8.lhs.value() == 1);
    CHECK(b8.rhs.value() == 1);
    CHECK(code_of([] { verify_lemma(CongruenceId::c5, 5); }) == Errc::unknown_id);
}

TEST_CASE("proof-step examples")
{
    const auto c5 = verify_proof_step(CongruenceId::c5, 5);
    REQUIRE(c5.size() == 3);
    CHECK(c5[1].index == 1);
    CHECK(c5[1].lhs.value() == 19);
    CHECK(c5[1].rhs.value() == 19);
    const auto c10 = verify_proof_step(CongruenceId::c10, 5);
    CHECK(c10.front().lhs.value() == 101);
    CHECK(c10.front().rhs.value() == 101);
    const auto c12 = verify_proof_step(CongruenceId::c12, 5);
    CHECK(c12.front().lhs.value() == 500);
    CHECK(c12.front().holds);
    CHECK(code_of([] { verify_proof_step(CongruenceId::thm1, 5); }) == Errc::unknown_id);
}

TEST_CASE("every tag holds for 5 <= p <= 100")
{
    for (const auto& r : sweep(kAll, 5, 100)) {
        INFO(to_string(r.id), " p=", r.p, " i=", r.index.value_or(-1));
        REQUIRE(r.holds);
        REQUIRE(r.modulus().k() == required_power(r.id));
    }
}

TEST_CASE("residue-ring evaluation equals exact rational evaluation")
{
    for (const std::uint64_t p : oracle::sieve_primes(5, 23)) {
        for (const CongruenceId id : kAll) {
            const auto ring = verify_at_prime({id}, p);
            const auto exact = oracle::exact_congruence(id, p);
            REQUIRE(ring.size() == exact.size());
            const PrimePowerModulus m(p, required_power(id));
            for (std::size_t k = 0; k < ring.size(); ++k) {
                INFO(to_string(id), " p=", p, " k=", k);
                REQUIRE(ring[k].lhs == residue_of_rational(exact[k].lhs, m));
                REQUIRE(ring[k].rhs == residue_of_rational(exact[k].rhs, m));
            }
        }
    }
}

TEST_CASE("power coherence: reducing both sides one power still agrees")
{
    for (const auto& r : sweep(kAll, 5, 60)) {
        const unsigned k = r.modulus().k();
        if (k > 1) {
            REQUIRE(r.lhs.reduce(k - 1) == r.rhs.reduce(k - 1));
        }
    }
}

TEST_CASE("the two halves add up to the thm1 sum")
{
    for (const std::uint64_t p : primes_in_range(5, 120)) {
        const auto r = verify_at_prime({CongruenceId::thm1, CongruenceId::c11, CongruenceId::c12}, p);
        REQUIRE(r.size() == 3);
        REQUIRE(r[1].lhs + r[2].lhs == r[0].lhs);
    }
}

TEST_CASE("thm1 and thm2 are unchanged with Domb values from the cz transformation")
{
    for (const std::uint64_t p : primes_in_range(5, 60)) {
        std::vector<Integer> values;
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(p); ++k) {
            values.push_back(domb_via_cz(k));
        }
        const auto a1 = verify_thm1(p, values);
        const auto b1 = verify_thm1(p);
        REQUIRE(a1.holds);
        REQUIRE(a1.lhs == b1.lhs);
        REQUIRE(a1.rhs == b1.rhs);
        const auto a2 = verify_thm2(p, values);
        const auto b2 = verify_thm2(p);
        REQUIRE(a2.holds);
        REQUIRE(a2.lhs == b2.lhs);
        REQUIRE(a2.rhs == b2.rhs);
    }
    std::vector<Integer> too_short(3, Integer(1));
    CHECK(code_of([&] { verify_thm1(7, too_short); }) == Errc::bad_index);
}

TEST_CASE("sweep ordering and counts")
{
    const auto two = sweep({CongruenceId::thm1}, 5, 7);
    REQUIRE(two.size() == 2);
    CHECK(two[0].p == 5);
    CHECK(two[1].p == 7);
    CHECK(two[0].holds);
    CHECK(two[1].holds);
    CHECK(sweep({}, 5, 100).empty());

    const auto mixed = sweep({CongruenceId::thm2, CongruenceId::thm1}, 5, 13, 3);
    REQUIRE(mixed.size() == 8);
    CHECK(mixed[0].p == 5);
    CHECK(mixed[0].id == CongruenceId::thm1);
    CHECK(mixed[1].id == CongruenceId::thm2);
    CHECK(mixed[7].p == 13);
    CHECK(code_of([] { sweep({CongruenceId::thm1}, 11, 7); }) == Errc::bad_range);
    CHECK(code_of([] { sweep({CongruenceId::thm1}, 3, 7); }) == Errc::p_too_small);
}
