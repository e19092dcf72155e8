#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "supercong/integer.hpp"
#include "supercong/residue.hpp"

namespace supercong {

/// Congruences checked per prime. Declaration order is the report order.
enum class CongruenceId {
    thm1,      ///< sum (3k+1) Domb(k)/(-32)^k  mod p^4
    thm2,      ///< sum (3k+2) Domb(k)/(-2)^k   mod p^4
    b3,        ///< sum (-1)^i/i^2 over i <= (p-1)/2, mod p
    b4,        ///< sum (-1)^i H_i/i, mod p
    b5,        ///< sum (-1)^i/i, mod p^2
    b6,        ///< sum 1/(p-4i) over i <= p/4, mod p^2
    b8,        ///< H^{(2)}_{floor(p/4)}, mod p
    b9,        ///< H_{floor(p/4)}, mod p^2
    b11,       ///< H_{(p-1)/2}, mod p^2
    c4,        ///< per-index expansion of (-1)^i (p-i) C(3i,i) C(p+2i,3i), mod p^4
    c5,        ///< per-index (-1)^i C(h,i) C(h+i,i) vs C(2i,i)^2/16^i, mod p^2
    c6,        ///< sum C(2i,i)^2/16^i (H_{2i}-H_i) vs the alternating harmonic sum, mod p^2
    c7,        ///< second-order analogue of c6, mod p^2
    c8,        ///< c6 in closed form via q_p(2) and E_{p-3}, mod p^2
    c9,        ///< c7 in closed form, mod p
    c10,       ///< sum_{i<=h} C(2i,i)^2/16^i, mod p^3
    c11,       ///< lower half S1 of the rearranged thm1 sum, mod p^4
    c12,       ///< upper half S2 of the rearranged thm1 sum, mod p^4
    c12_input, ///< sum_{h<i<p} C(2i,i)^2/16^i, mod p^3
    d4,        ///< per-index expansion of (p-2i) C(3i,i) C(p+i,3i), mod p^4
    d5,        ///< thm2 sum vs its harmonic expansion, mod p^4
};

inline constexpr CongruenceId kAllCongruences[] = {
    CongruenceId::thm1, CongruenceId::thm2, CongruenceId::b3,  CongruenceId::b4,        CongruenceId::b5,
    CongruenceId::b6,   CongruenceId::b8,   CongruenceId::b9,  CongruenceId::b11,       CongruenceId::c4,
    CongruenceId::c5,   CongruenceId::c6,   CongruenceId::c7,  CongruenceId::c8,        CongruenceId::c9,
    CongruenceId::c10,  CongruenceId::c11,  CongruenceId::c12, CongruenceId::c12_input, CongruenceId::d4,
    CongruenceId::d5,
};

std::string_view to_string(CongruenceId id) noexcept;
std::optional<CongruenceId> parse_congruence_id(std::string_view tag) noexcept;

/// Exponent k of the modulus p^k at which the congruence is asserted.
unsigned required_power(CongruenceId id) noexcept;

/// True for steps that yield one result per index i in [0, (p-1)/2].
bool is_per_index(CongruenceId id) noexcept;

struct CongruenceResult {
    CongruenceId id;
    std::uint64_t p;
    std::optional<std::int64_t> index;
    Residue lhs;
    Residue rhs;
    bool holds;

    const PrimePowerModulus& modulus() const noexcept { return lhs.modulus(); }
};

/// Error{not_prime} unless p is prime, Error{p_too_small} if p < 5.
void require_sweep_prime(std::uint64_t p);

CongruenceResult verify_thm1(std::uint64_t p);
CongruenceResult verify_thm2(std::uint64_t p);

/// As above, but with Domb(0..p-1) supplied by the caller as exact integers
/// (e.g. from one of the transformation formulas) and reduced mod p^4.
CongruenceResult verify_thm1(std::uint64_t p, std::span<const Integer> domb_values);
CongruenceResult verify_thm2(std::uint64_t p, std::span<const Integer> domb_values);

/// One of b3, b4, b5, b6, b8, b9, b11.
CongruenceResult verify_lemma(CongruenceId id, std::uint64_t p);

/// One of c4..d5; per-index steps return one result per i.
std::vector<CongruenceResult> verify_proof_step(CongruenceId id, std::uint64_t p);

/// All requested ids at one prime, sharing the per-prime tables; ordered by
/// (id, index).
std::vector<CongruenceResult> verify_at_prime(const std::vector<CongruenceId>& ids, std::uint64_t p);

/// Every id at every prime in [p_lo, p_hi], ordered by (prime, id, index).
/// Error{bad_range} if p_lo > p_hi, Error{p_too_small} if p_lo < 5.
std::vector<CongruenceResult> sweep(const std::vector<CongruenceId>& ids, std::uint64_t p_lo, std::uint64_t p_hi,
                                    unsigned jobs = 1);

} // namespace supercong
