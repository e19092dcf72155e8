#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "supercong/rational.hpp"

namespace supercong {

/// Every finite identity that is checked by exact evaluation of both sides.
enum class IdentityId {
    cz,           ///< Domb via Chan-Zudilin transformation
    sunzh,        ///< Domb via Z.-H. Sun transformation
    ctyz,         ///< Domb via Franel numbers (Chan-Tanigawa-Yang-Zudilin)
    c2,           ///< closed form of sum_{k=i}^{n-1} (3k+1)(-2)^{-k} C(k+2i,3i)
    c3,           ///< rearranged (3k+1)/(-32)^k Domb sum
    d2,           ///< closed form of sum_{k=2i}^{n-1} (-2)^k (3k+2) C(k+i,3i)
    d3,           ///< rearranged (3k+2)/(-2)^k Domb sum
    b1,           ///< harmonic-weighted Legendre sum, first order
    b2,           ///< harmonic-weighted Legendre sum, second order
    b10gen,       ///< alternating harmonic sum as a difference of H's
    e_inner_plus, ///< sum_{k=i}^{n-1} (2k+1) C(k,i) C(k+i,i)
    e_inner_alt,  ///< signed variant of e_inner_plus
    e1,           ///< normalized sum with 8^{n-1-k} via Franel numbers
    e2,           ///< normalized sum with (-8)^{n-1-k} via Franel numbers
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::cz,     IdentityId::sunzh,        IdentityId::ctyz,        IdentityId::c2, IdentityId::c3,
    IdentityId::d2,     IdentityId::d3,           IdentityId::b1,          IdentityId::b2, IdentityId::b10gen,
    IdentityId::e_inner_plus, IdentityId::e_inner_alt, IdentityId::e1, IdentityId::e2,
};

std::string_view to_string(IdentityId id) noexcept;
std::optional<IdentityId> parse_identity_id(std::string_view tag) noexcept;

struct IdentityReport {
    IdentityId id;
    std::int64_t n;
    std::optional<std::int64_t> i;
    Rational lhs;
    Rational rhs;
    bool holds;
};

/// lhs = Domb(n) by definition, rhs = the transformed sum for tag cz, sunzh or ctyz.
IdentityReport check_transformation(IdentityId tag, std::int64_t n);

/// 0 <= i <= n-1, else Error{bad_index}.
IdentityReport check_c2(std::int64_t n, std::int64_t i);

/// 0 <= i, 2i <= n-1, else Error{bad_index}.
IdentityReport check_d2(std::int64_t n, std::int64_t i);

/// Tag c3 or d3; n odd and >= 1 (Error{even_n} for even n).
IdentityReport check_rearrangement(IdentityId tag, std::int64_t n);

IdentityReport check_b1(std::int64_t n);
IdentityReport check_b2(std::int64_t n);
IdentityReport check_b10gen(std::int64_t m);

/// Tag e_inner_plus or e_inner_alt; 0 <= i <= n-1.
IdentityReport check_e_inner(IdentityId tag, std::int64_t n, std::int64_t i);

/// Tag e1 or e2, n >= 1. The left side is divided by n and must be an
/// integer; a fractional left side fails the check even if the sides agree.
IdentityReport check_e_full(IdentityId tag, std::int64_t n);

/// Upper parameters per identity family for a suite run.
struct IdentityRanges {
    std::int64_t transform_n = 100;     ///< cz, sunzh, ctyz: 0..=n
    std::int64_t triangle_n = 100;      ///< c2, d2, e_inner_*: every valid (n, i) with n <= this
    std::int64_t rearrangement_n = 100; ///< c3, d3: odd n <= this
    std::int64_t harmonic_n = 100;      ///< b1, b2: 0..=n
    std::int64_t b10gen_m = 100;        ///< b10gen: 0..=m
    std::int64_t full_n = 100;          ///< e1, e2: 1..=n

    static IdentityRanges uniform(std::int64_t n) { return {n, n, n, n, n, n}; }
};

/// Runs every requested identity over its range; results are ordered by
/// (identity, n, i) regardless of `jobs`.
std::vector<IdentityReport> run_identities(const std::vector<IdentityId>& ids, const IdentityRanges& ranges,
                                           unsigned jobs = 1);

} // namespace supercong
