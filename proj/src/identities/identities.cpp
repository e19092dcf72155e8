#include "supercong/identities.hpp"
#include "supercong/error.hpp"
#include "supercong/harmonic.hpp"
#include "supercong/parallel.hpp"
#include "supercong/sequences.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <string>

namespace supercong {

namespace {

constexpr std::array<std::string_view, 14> kNames = {
    "cz", "sunzh", "ctyz", "c2", "c3", "d2", "d3", "b1", "b2", "b10gen", "e_inner_plus", "e_inner_alt", "e1", "e2",
};

Integer sign_power(std::int64_t e) { return Integer(e % 2 == 0 ? 1 : -1); }

Integer pow_i(long base, std::int64_t e) { return Integer::pow(base, static_cast<unsigned long>(e)); }

IdentityReport make(IdentityId id, std::int64_t n, std::optional<std::int64_t> i, Rational lhs, Rational rhs)
{
    const bool holds = lhs == rhs;
    return {id, n, i, std::move(lhs), std::move(rhs), holds};
}

[[noreturn]] void bad_index(IdentityId id, std::int64_t n, std::int64_t i)
{
    throw Error(Errc::bad_index,
                std::string(to_string(id)) + " at n = " + std::to_string(n) + ", i = " + std::to_string(i));
}

// H_{2i} - H_i and (H_{2i} - H_i)^2 - H_{2i}^{(2)} - H_i^{(2)}, memoized by i.
struct HarmonicWeights {
    Rational first;
    Rational second;
};

HarmonicWeights harmonic_weights(std::int64_t i)
{
    static std::mutex mutex;
    static std::vector<HarmonicWeights> cache;
    std::lock_guard lock(mutex);
    while (static_cast<std::int64_t>(cache.size()) <= i) {
        const auto j = static_cast<std::int64_t>(cache.size());
        const Rational x = harmonic(2 * j, 1) - harmonic(j, 1);
        cache.push_back({x, x * x - harmonic(2 * j, 2) - harmonic(j, 2)});
    }
    return cache[static_cast<std::size_t>(i)];
}

} // namespace

std::string_view to_string(IdentityId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<IdentityId> parse_identity_id(std::string_view tag) noexcept
{
    for (std::size_t k = 0; k < kNames.size(); ++k) {
        if (kNames[k] == tag) {
            return static_cast<IdentityId>(k);
        }
    }
    return std::nullopt;
}

IdentityReport check_transformation(IdentityId tag, std::int64_t n)
{
    if (n < 0) {
        bad_index(tag, n, 0);
    }
    Integer rhs;
    switch (tag) {
    case IdentityId::cz: rhs = domb_via_cz(n); break;
    case IdentityId::sunzh: rhs = domb_via_sunzh(n); break;
    case IdentityId::ctyz: rhs = domb_via_ctyz(n); break;
    default: throw Error(Errc::unknown_id, std::string(to_string(tag)) + " is not a transformation");
    }
    return make(tag, n, std::nullopt, domb(n), rhs);
}

IdentityReport check_c2(std::int64_t n, std::int64_t i)
{
    if (i < 0 || i > n - 1) {
        bad_index(IdentityId::c2, n, i);
    }
    Rational lhs;
    for (std::int64_t k = i; k <= n - 1; ++k) {
        lhs += Rational(Integer(3 * k + 1) * binomial(k + 2 * i, 3 * i), pow_i(-2, k));
    }
    Rational rhs(Integer(n - i) * binomial(n + 2 * i, 3 * i), pow_i(-2, n - 1));
    return make(IdentityId::c2, n, i, std::move(lhs), std::move(rhs));
}

IdentityReport check_d2(std::int64_t n, std::int64_t i)
{
    if (i < 0 || 2 * i > n - 1) {
        bad_index(IdentityId::d2, n, i);
    }
    Integer lhs(0);
    for (std::int64_t k = 2 * i; k <= n - 1; ++k) {
        lhs += pow_i(-2, k) * Integer(3 * k + 2) * binomial(k + i, 3 * i);
    }
    Integer rhs = sign_power(n - 1) * Integer(n - 2 * i) * binomial(n + i, 3 * i) * pow_i(2, n);
    return make(IdentityId::d2, n, i, lhs, rhs);
}

IdentityReport check_rearrangement(IdentityId tag, std::int64_t n)
{
    if (tag != IdentityId::c3 && tag != IdentityId::d3) {
        throw Error(Errc::unknown_id, std::string(to_string(tag)) + " is not a rearrangement");
    }
    if (n < 1) {
        bad_index(tag, n, 0);
    }
    if (n % 2 == 0) {
        throw Error(Errc::even_n, std::string(to_string(tag)) + " needs odd n, got " + std::to_string(n));
    }
    Rational lhs;
    Rational rhs;
    if (tag == IdentityId::c3) {
        for (std::int64_t k = 0; k <= n - 1; ++k) {
            lhs += Rational(Integer(3 * k + 1) * domb(k), pow_i(-32, k));
        }
        for (std::int64_t i = 0; i <= n - 1; ++i) {
            const Integer c = central_binomial(i);
            rhs += Rational(Integer(n - i) * c * c * binomial(3 * i, i) * binomial(n + 2 * i, 3 * i),
                            pow_i(2, n - 1) * pow_i(-16, i));
        }
    } else {
        for (std::int64_t k = 0; k <= n - 1; ++k) {
            lhs += Rational(Integer(3 * k + 2) * domb(k), pow_i(-2, k));
        }
        for (std::int64_t i = 0; i <= (n - 1) / 2; ++i) {
            const Integer c = central_binomial(i);
            rhs += Rational(pow_i(2, n) * Integer(n - 2 * i) * c * c * binomial(3 * i, i) * binomial(n + i, 3 * i),
                            pow_i(16, i));
        }
    }
    return make(tag, n, std::nullopt, std::move(lhs), std::move(rhs));
}

IdentityReport check_b1(std::int64_t n)
{
    if (n < 0) {
        bad_index(IdentityId::b1, n, 0);
    }
    Rational lhs;
    for (std::int64_t i = 0; i <= n; ++i) {
        lhs += Rational(sign_power(i) * binomial(n, i) * binomial(n + i, i)) * harmonic_weights(i).first;
    }
    Rational rhs = Rational(sign_power(n + 1)) * alt_harmonic(n, 1);
    return make(IdentityId::b1, n, std::nullopt, std::move(lhs), std::move(rhs));
}

IdentityReport check_b2(std::int64_t n)
{
    if (n < 0) {
        bad_index(IdentityId::b2, n, 0);
    }
    Rational lhs;
    for (std::int64_t i = 0; i <= n; ++i) {
        lhs += Rational(sign_power(i) * binomial(n, i) * binomial(n + i, i)) * harmonic_weights(i).second;
    }
    Rational rhs = Rational(Integer(2) * sign_power(n)) * (alt_harmonic(n, 2) + alt_harmonic_weighted(n));
    return make(IdentityId::b2, n, std::nullopt, std::move(lhs), std::move(rhs));
}

IdentityReport check_b10gen(std::int64_t m)
{
    if (m < 0) {
        bad_index(IdentityId::b10gen, m, 0);
    }
    return make(IdentityId::b10gen, m, std::nullopt, alt_harmonic(m, 1), harmonic(m / 2, 1) - harmonic(m, 1));
}

IdentityReport check_e_inner(IdentityId tag, std::int64_t n, std::int64_t i)
{
    if (tag != IdentityId::e_inner_plus && tag != IdentityId::e_inner_alt) {
        throw Error(Errc::unknown_id, std::string(to_string(tag)) + " is not an inner binomial identity");
    }
    if (i < 0 || i > n - 1) {
        bad_index(tag, n, i);
    }
    const bool alternating = tag == IdentityId::e_inner_alt;
    Integer lhs(0);
    for (std::int64_t k = i; k <= n - 1; ++k) {
        Integer term = Integer(2 * k + 1) * binomial(k, i) * binomial(k + i, i);
        if (alternating && k % 2 == 1) {
            lhs -= term;
        } else {
            lhs += term;
        }
    }
    Rational rhs = alternating
                       ? Rational(sign_power(n - 1) * Integer(n) * binomial(n - 1, i) * binomial(n + i, i))
                       : Rational(Integer(n) * Integer(n - i) * binomial(2 * i, i) * binomial(n + i, 2 * i),
                                  Integer(i + 1));
    return make(tag, n, i, lhs, std::move(rhs));
}

IdentityReport check_e_full(IdentityId tag, std::int64_t n)
{
    if (tag != IdentityId::e1 && tag != IdentityId::e2) {
        throw Error(Errc::unknown_id, std::string(to_string(tag)) + " is not a normalized Domb sum");
    }
    if (n < 1) {
        bad_index(tag, n, 0);
    }
    const long base = tag == IdentityId::e1 ? 8 : -8;
    Integer sum(0);
    for (std::int64_t k = 0; k <= n - 1; ++k) {
        sum += Integer(2 * k + 1) * domb(k) * pow_i(base, n - 1 - k);
    }
    Rational lhs(sum, Integer(n));

    Rational rhs;
    for (std::int64_t i = 0; i <= n - 1; ++i) {
        const Integer common = sign_power(i) * pow_i(8, n - 1 - i) * franel(i);
        if (tag == IdentityId::e1) {
            rhs += Rational(common * Integer(n - i) * binomial(2 * i, i) * binomial(n + i, 2 * i), Integer(i + 1));
        } else {
            rhs += Rational(common * binomial(n - 1, i) * binomial(n + i, i));
        }
    }
    IdentityReport report = make(tag, n, std::nullopt, std::move(lhs), std::move(rhs));
    report.holds = report.holds && report.lhs.is_integer();
    return report;
}

std::vector<IdentityReport> run_identities(const std::vector<IdentityId>& ids, const IdentityRanges& ranges,
                                           unsigned jobs)
{
    // One task per (identity, n); two-parameter identities sweep all i inside the task.
    using Task = std::function<std::vector<IdentityReport>()>;
    std::vector<Task> tasks;
    std::vector<IdentityId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    for (const IdentityId id : sorted) {
        switch (id) {
        case IdentityId::cz:
        case IdentityId::sunzh:
        case IdentityId::ctyz:
            for (std::int64_t n = 0; n <= ranges.transform_n; ++n) {
                tasks.emplace_back([id, n] { return std::vector{check_transformation(id, n)}; });
            }
            break;
        case IdentityId::c2:
        case IdentityId::e_inner_plus:
        case IdentityId::e_inner_alt:
            for (std::int64_t n = 1; n <= ranges.triangle_n; ++n) {
                tasks.emplace_back([id, n] {
                    std::vector<IdentityReport> out;
                    for (std::int64_t i = 0; i <= n - 1; ++i) {
                        out.push_back(id == IdentityId::c2 ? check_c2(n, i) : check_e_inner(id, n, i));
                    }
                    return out;
                });
            }
            break;
        case IdentityId::d2:
            for (std::int64_t n = 1; n <= ranges.triangle_n; ++n) {
                tasks.emplace_back([n] {
                    std::vector<IdentityReport> out;
                    for (std::int64_t i = 0; 2 * i <= n - 1; ++i) {
                        out.push_back(check_d2(n, i));
                    }
                    return out;
                });
            }
            break;
        case IdentityId::c3:
        case IdentityId::d3:
            for (std::int64_t n = 1; n <= ranges.rearrangement_n; n += 2) {
                tasks.emplace_back([id, n] { return std::vector{check_rearrangement(id, n)}; });
            }
            break;
        case IdentityId::b1:
        case IdentityId::b2:
            for (std::int64_t n = 0; n <= ranges.harmonic_n; ++n) {
                tasks.emplace_back(
                    [id, n] { return std::vector{id == IdentityId::b1 ? check_b1(n) : check_b2(n)}; });
            }
            break;
        case IdentityId::b10gen:
            for (std::int64_t m = 0; m <= ranges.b10gen_m; ++m) {
                tasks.emplace_back([m] { return std::vector{check_b10gen(m)}; });
            }
            break;
        case IdentityId::e1:
        case IdentityId::e2:
            for (std::int64_t n = 1; n <= ranges.full_n; ++n) {
                tasks.emplace_back([id, n] { return std::vector{check_e_full(id, n)}; });
            }
            break;
        }
    }

    auto chunks = parallel_map(tasks.size(), jobs, [&](std::size_t k) { return tasks[k](); });
    std::vector<IdentityReport> out;
    for (auto& chunk : chunks) {
        for (auto& r : chunk) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace supercong
