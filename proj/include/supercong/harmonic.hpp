#pragma once

#include <cstdint>

#include "supercong/rational.hpp"
#include "supercong/residue.hpp"

namespace supercong {

enum class HarmonicVariant {
    plain,                ///< sum_{j<=n} 1/j^r
    alternating,          ///< sum_{i<=n} (-1)^i / i^r
    alternating_weighted, ///< sum_{i<=n} (-1)^i H_i / i  (order ignored)
};

struct HarmonicSpec {
    std::int64_t n = 0;
    unsigned r = 1;
    HarmonicVariant variant = HarmonicVariant::plain;
};

/// H_n^{(r)}; orders 1 and 2 are memoized.
Rational harmonic(std::int64_t n, unsigned r);

/// sum_{i=1}^n (-1)^i / i^r for r in {1, 2}.
Rational alt_harmonic(std::int64_t n, unsigned r);

/// sum_{i=1}^n (-1)^i H_i / i.
Rational alt_harmonic_weighted(std::int64_t n);

Rational harmonic_value(const HarmonicSpec& spec);

/// Exact value reduced into Z/p^k. Requires spec.n < p so that no
/// denominator is divisible by p; Error{index_reaches_p} otherwise.
Residue harmonic_residue(const HarmonicSpec& spec, const PrimePowerModulus& m);

} // namespace supercong
