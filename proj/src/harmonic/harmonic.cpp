#include "supercong/harmonic.hpp"
#include "supercong/error.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace supercong {

namespace {

void require_nonnegative(std::int64_t n)
{
    if (n < 0) {
        throw Error(Errc::bad_index, "harmonic index " + std::to_string(n) + " < 0");
    }
}

Integer power_of(std::int64_t j, unsigned r) { return Integer::pow(Integer(j), r); }

// Prefix sums H_0..H_n of a fixed order, grown on demand.
class HarmonicMemo {
public:
    explicit HarmonicMemo(unsigned r) : r_(r), values_{Rational(0)} {}

    Rational at(std::int64_t n)
    {
        std::lock_guard lock(mutex_);
        while (static_cast<std::int64_t>(values_.size()) <= n) {
            const auto j = static_cast<std::int64_t>(values_.size());
            values_.push_back(values_.back() + Rational(Integer(1), power_of(j, r_)));
        }
        return values_[static_cast<std::size_t>(n)];
    }

private:
    unsigned r_;
    std::mutex mutex_;
    std::vector<Rational> values_;
};

HarmonicMemo& memo(unsigned r)
{
    static HarmonicMemo first(1);
    static HarmonicMemo second(2);
    return r == 1 ? first : second;
}

} // namespace

Rational harmonic(std::int64_t n, unsigned r)
{
    require_nonnegative(n);
    if (r == 0) {
        throw Error(Errc::bad_index, "harmonic order must be >= 1");
    }
    if (r <= 2) {
        return memo(r).at(n);
    }
    Rational sum;
    for (std::int64_t j = 1; j <= n; ++j) {
        sum += Rational(Integer(1), power_of(j, r));
    }
    return sum;
}

Rational alt_harmonic(std::int64_t n, unsigned r)
{
    require_nonnegative(n);
    if (r != 1 && r != 2) {
        throw Error(Errc::bad_index, "alternating harmonic order must be 1 or 2");
    }
    Rational sum;
    for (std::int64_t i = 1; i <= n; ++i) {
        const Integer den = power_of(i, r);
        sum += Rational(Integer(i % 2 == 0 ? 1 : -1), den);
    }
    return sum;
}

Rational alt_harmonic_weighted(std::int64_t n)
{
    require_nonnegative(n);
    Rational sum;
    Rational h; // H_i, built alongside the outer sum
    for (std::int64_t i = 1; i <= n; ++i) {
        h += Rational(Integer(1), Integer(i));
        const Rational term = h * Rational(Integer(1), Integer(i));
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational harmonic_value(const HarmonicSpec& spec)
{
    switch (spec.variant) {
    case HarmonicVariant::plain: return harmonic(spec.n, spec.r);
    case HarmonicVariant::alternating: return alt_harmonic(spec.n, spec.r);
    case HarmonicVariant::alternating_weighted: return alt_harmonic_weighted(spec.n);
    }
    throw std::logic_error("unhandled harmonic variant");
}

Residue harmonic_residue(const HarmonicSpec& spec, const PrimePowerModulus& m)
{
    if (spec.n >= static_cast<std::int64_t>(m.p())) {
        throw Error(Errc::index_reaches_p,
                    "n = " + std::to_string(spec.n) + " >= p = " + std::to_string(m.p()));
    }
    return residue_of_rational(harmonic_value(spec), m);
}

} // namespace supercong
