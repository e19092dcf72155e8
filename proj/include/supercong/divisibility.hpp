#pragma once

#include <cstdint>
#include <optional>

#include "supercong/integer.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// (1/n) sum_{k<n} (2k+1) Domb(k) (sign*8)^{n-1-k}, kept as an exact fraction
/// so a non-integral or non-positive outcome can be reported rather than
/// floored away.
struct NormalizedDombSum {
    std::int64_t n;
    int sign; ///< +1 for base 8, -1 for base -8
    Integer sum;
    Rational value;

    bool integral() const { return value.is_integer(); }
    bool positive() const { return value.sign() > 0; }
    bool holds() const { return integral() && positive(); }
};

/// n >= 1 and sign in {+1, -1}; Error{bad_index} otherwise.
NormalizedDombSum evaluate_thm3(std::int64_t n, int sign);

/// The normalized sum as an integer. Throws Error{not_integer} or
/// Error{not_positive} when the value would falsify the divisibility claim.
Integer thm3_value(std::int64_t n, int sign);

enum class MonotoneProperty {
    ratio_increasing, ///< Domb(k+1)/Domb(k) < Domb(k+2)/Domb(k+1)
    ratio_above_8,    ///< Domb(k+1)/Domb(k) > 8 for k >= 2
    weighted_increasing, ///< a_k = (2k+1) Domb(k)/8^k increasing
};

struct MonotoneReport {
    bool holds = true;
    std::optional<MonotoneProperty> failed_property;
    std::optional<std::int64_t> first_failure;
    std::int64_t ratio_comparisons = 0;
    std::int64_t bound_comparisons = 0;
    std::int64_t weighted_comparisons = 0;
};

/// Checks, with cross-multiplied integer comparisons, that the Domb ratios
/// are strictly increasing for 0 <= k <= N-1, exceed 8 for 2 <= k <= N, and
/// that a_k strictly increases for 0 <= k <= N. N >= 3.
MonotoneReport check_ratio_monotone(std::int64_t N);

/// sum_{k<n} (2k+1) Domb(k) (-8)^{n-1-k}.
Integer alternating_domb_sum(std::int64_t n);

/// alternating_domb_sum(n) > 0; n >= 1.
bool check_alternating_positivity(std::int64_t n);

} // namespace supercong
