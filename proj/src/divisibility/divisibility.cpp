#include "supercong/divisibility.hpp"
#include "supercong/error.hpp"
#include "supercong/sequences.hpp"

#include <string>

namespace supercong {

namespace {

Integer weighted_domb_sum(std::int64_t n, long base)
{
    const auto dombs = sequence_table(SequenceId::domb).prefix(n - 1);
    Integer sum(0);
    Integer power(1); // base^{n-1-k}, running from k = n-1 down to 0
    for (std::int64_t k = n - 1; k >= 0; --k) {
        sum += Integer(2 * k + 1) * dombs[static_cast<std::size_t>(k)] * power;
        power *= Integer(base);
    }
    return sum;
}

} // namespace

NormalizedDombSum evaluate_thm3(std::int64_t n, int sign)
{
    if (n < 1 || (sign != 1 && sign != -1)) {
        throw Error(Errc::bad_index, "thm3 needs n >= 1 and sign +-1, got n = " + std::to_string(n));
    }
    Integer sum = weighted_domb_sum(n, 8L * sign);
    Rational value(sum, Integer(n));
    return {n, sign, std::move(sum), std::move(value)};
}

Integer thm3_value(std::int64_t n, int sign)
{
    const NormalizedDombSum s = evaluate_thm3(n, sign);
    const std::string where = "n = " + std::to_string(n) + ", base " + (sign > 0 ? "8" : "-8");
    if (!s.integral()) {
        throw Error(Errc::not_integer, where + ": " + s.value.to_string());
    }
    if (!s.positive()) {
        throw Error(Errc::not_positive, where + ": " + s.value.to_string());
    }
    return s.value.num();
}

MonotoneReport check_ratio_monotone(std::int64_t N)
{
    if (N < 3) {
        throw Error(Errc::bad_index, "check_ratio_monotone needs N >= 3");
    }
    const auto d = sequence_table(SequenceId::domb).prefix(N + 1);
    auto at = [&](std::int64_t k) -> const Integer& { return d[static_cast<std::size_t>(k)]; };
    MonotoneReport report;
    auto fail = [&](MonotoneProperty prop, std::int64_t k) {
        if (report.holds) {
            report.holds = false;
            report.failed_property = prop;
            report.first_failure = k;
        }
    };

    // D(k+1)/D(k) < D(k+2)/D(k+1)  <=>  D(k+1)^2 < D(k) D(k+2)
    for (std::int64_t k = 0; k <= N - 1; ++k) {
        ++report.ratio_comparisons;
        if (!(at(k + 1) * at(k + 1) < at(k) * at(k + 2))) {
            fail(MonotoneProperty::ratio_increasing, k);
        }
    }
    for (std::int64_t k = 2; k <= N; ++k) {
        ++report.bound_comparisons;
        if (!(at(k + 1) > Integer(8) * at(k))) {
            fail(MonotoneProperty::ratio_above_8, k);
        }
    }
    // a_k < a_{k+1}  <=>  8 (2k+1) D(k) < (2k+3) D(k+1)
    for (std::int64_t k = 0; k <= N; ++k) {
        ++report.weighted_comparisons;
        if (!(Integer(8 * (2 * k + 1)) * at(k) < Integer(2 * k + 3) * at(k + 1))) {
            fail(MonotoneProperty::weighted_increasing, k);
        }
    }
    return report;
}

Integer alternating_domb_sum(std::int64_t n)
{
    if (n < 1) {
        throw Error(Errc::bad_index, "alternating sum needs n >= 1");
    }
    return weighted_domb_sum(n, -8);
}

bool check_alternating_positivity(std::int64_t n) { return alternating_domb_sum(n).sign() > 0; }

} // namespace supercong
