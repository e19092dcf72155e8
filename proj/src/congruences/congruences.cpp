#include "supercong/congruences.hpp"
#include "supercong/error.hpp"
#include "supercong/parallel.hpp"
#include "supercong/sequences.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace supercong {

namespace {

constexpr std::array<std::string_view, 21> kNames = {
    "thm1", "thm2", "b3", "b4", "b5", "b6",  "b8",  "b9",        "b11", "c4", "c5",
    "c6",   "c7",   "c8", "c9", "c10", "c11", "c12", "c12_input", "d4", "d5",
};

constexpr std::array<unsigned, 21> kPowers = {
    4, 4, 1, 1, 2, 2, 1, 2, 2, 4, 2, 2, 2, 2, 1, 3, 4, 4, 3, 4, 4,
};

constexpr unsigned kWorkingPower = 4;

// Everything a prime needs, computed once modulo p^4. Not shared between
// threads: each task owns its context.
class PrimeContext {
public:
    explicit PrimeContext(std::uint64_t p)
        : p_(p),
          mod_(p, kWorkingPower),
          binom_(mod_, 3 * p),
          half_((p - 1) / 2),
          quarter_(p / 4),
          sign_(mod_, half_ % 2 == 0 ? 1 : -1),
          euler_(mod_, static_cast<std::int64_t>(euler_number_mod(static_cast<std::int64_t>(p) - 3, p).value())),
          fermat2_(fermat_quotient(Integer(2), p, kWorkingPower)),
          pr_(mod_, static_cast<std::int64_t>(p))
    {
        inv_.push_back(Residue(mod_));
        h1_.push_back(Residue(mod_));
        h2_.push_back(Residue(mod_));
        for (std::uint64_t j = 1; j < p; ++j) {
            const Residue inv = Residue(mod_, static_cast<std::int64_t>(j)).inverse();
            inv_.push_back(inv);
            h1_.push_back(h1_.back() + inv);
            h2_.push_back(h2_.back() + inv * inv);
        }
    }

    std::uint64_t p() const { return p_; }
    const PrimePowerModulus& mod() const { return mod_; }
    std::int64_t half() const { return half_; }
    std::int64_t quarter() const { return quarter_; }
    Residue r(std::int64_t v) const { return Residue(mod_, v); }
    Residue pp(unsigned e) const { return pr_.pow(e); }
    const Residue& sign() const { return sign_; }
    const Residue& euler() const { return euler_; }
    const Residue& q() const { return fermat2_; }
    Residue inv(std::int64_t j) const { return inv_[static_cast<std::size_t>(j)]; }
    Residue binom(std::int64_t n, std::int64_t k) const { return binom_(n, k); }

    Residue harmonic_gap(std::int64_t i) const { return h1_[idx(2 * i)] - h1_[idx(i)]; }
    Residue harmonic_gap2(std::int64_t i) const
    {
        const Residue x = harmonic_gap(i);
        return x * x - h2_[idx(2 * i)] - h2_[idx(i)];
    }
    Residue h1(std::int64_t n) const { return h1_[idx(n)]; }
    Residue h2(std::int64_t n) const { return h2_[idx(n)]; }

    // C(2i,i)^2 / 16^i
    Residue central_square_term(std::int64_t i) const
    {
        const Residue c = binom(2 * i, i);
        return c * c * r(16).inverse().pow(static_cast<std::uint64_t>(i));
    }

    // 2^{1-p} (p-i) (-16)^{-i} C(2i,i)^2 C(3i,i) C(p+2i,3i)
    Residue rearranged_term(std::int64_t i) const
    {
        const auto P = static_cast<std::int64_t>(p_);
        const Residue c = binom(2 * i, i);
        return r(2).inverse().pow(p_ - 1) * r(P - i) * r(-16).inverse().pow(static_cast<std::uint64_t>(i)) * c * c *
               binom(3 * i, i) * binom(P + 2 * i, 3 * i);
    }

    void set_domb(std::vector<Residue> values) { domb_ = std::move(values); }

    const std::vector<Residue>& domb()
    {
        if (domb_.empty()) {
            for (std::int64_t k = 0; k < static_cast<std::int64_t>(p_); ++k) {
                Residue sum(mod_);
                for (std::int64_t j = 0; j <= k; ++j) {
                    const Residue c = binom(k, j);
                    sum += c * c * binom(2 * j, j) * binom(2 * k - 2 * j, k - j);
                }
                domb_.push_back(sum);
            }
        }
        return domb_;
    }

private:
    static std::size_t idx(std::int64_t n) { return static_cast<std::size_t>(n); }

    std::uint64_t p_;
    PrimePowerModulus mod_;
    BinomialTableMod binom_;
    std::int64_t half_;
    std::int64_t quarter_;
    Residue sign_;
    Residue euler_;
    Residue fermat2_;
    Residue pr_;
    std::vector<Residue> inv_;
    std::vector<Residue> h1_;
    std::vector<Residue> h2_;
    std::vector<Residue> domb_;
};

CongruenceResult result(CongruenceId id, const PrimeContext& ctx, const Residue& lhs, const Residue& rhs,
                        std::optional<std::int64_t> index = std::nullopt)
{
    const unsigned k = required_power(id);
    Residue l = lhs.reduce(k);
    Residue r = rhs.reduce(k);
    const bool holds = l == r;
    return {id, ctx.p(), index, std::move(l), std::move(r), holds};
}

// sum_{k<p} (a k + b) Domb(k) base^{-k}
Residue weighted_domb_sum(PrimeContext& ctx, std::int64_t a, std::int64_t b, std::int64_t base)
{
    const auto& d = ctx.domb();
    const Residue step = ctx.r(base).inverse();
    Residue power = ctx.r(1);
    Residue sum(ctx.mod());
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(ctx.p()); ++k) {
        sum += ctx.r(a * k + b) * d[static_cast<std::size_t>(k)] * power;
        power *= step;
    }
    return sum;
}

Residue alternating(const PrimeContext& ctx, std::int64_t i) { return ctx.r(i % 2 == 0 ? 1 : -1); }

// sum_{i=1}^{h} (-1)^i / i
Residue alt_inverse_sum(const PrimeContext& ctx)
{
    Residue s(ctx.mod());
    for (std::int64_t i = 1; i <= ctx.half(); ++i) {
        s += alternating(ctx, i) * ctx.inv(i);
    }
    return s;
}

// sum_{i=1}^{h} (-1)^i / i^2
Residue alt_inverse_square_sum(const PrimeContext& ctx)
{
    Residue s(ctx.mod());
    for (std::int64_t i = 1; i <= ctx.half(); ++i) {
        s += alternating(ctx, i) * ctx.inv(i) * ctx.inv(i);
    }
    return s;
}

// sum_{i=1}^{h} (-1)^i H_i / i
Residue alt_weighted_sum(const PrimeContext& ctx)
{
    Residue s(ctx.mod());
    for (std::int64_t i = 1; i <= ctx.half(); ++i) {
        s += alternating(ctx, i) * ctx.h1(i) * ctx.inv(i);
    }
    return s;
}

// sum_{i<=h} C(2i,i)^2/16^i * weight(i)
template <typename Weight>
Residue central_sum(const PrimeContext& ctx, Weight weight)
{
    Residue s(ctx.mod());
    for (std::int64_t i = 0; i <= ctx.half(); ++i) {
        s += ctx.central_square_term(i) * weight(i);
    }
    return s;
}

void evaluate(CongruenceId id, PrimeContext& ctx, std::vector<CongruenceResult>& out)
{
    const auto P = static_cast<std::int64_t>(ctx.p());
    const Residue p = ctx.pp(1);
    const Residue p2 = ctx.pp(2);
    const Residue p3 = ctx.pp(3);
    const Residue& s = ctx.sign();
    const Residue& e = ctx.euler();
    const Residue& q = ctx.q();
    const Residue inv2 = ctx.r(2).inverse();

    switch (id) {
    case CongruenceId::thm1:
        out.push_back(result(id, ctx, weighted_domb_sum(ctx, 3, 1, -32), s * p + p3 * e));
        return;
    case CongruenceId::thm2:
        out.push_back(result(id, ctx, weighted_domb_sum(ctx, 3, 2, -2), ctx.r(2) * p * s + ctx.r(6) * p3 * e));
        return;
    case CongruenceId::b3:
        out.push_back(result(id, ctx, alt_inverse_square_sum(ctx), s * ctx.r(2) * e));
        return;
    case CongruenceId::b4:
        out.push_back(result(id, ctx, alt_weighted_sum(ctx), q * q * inv2 + s * e));
        return;
    case CongruenceId::b5:
        out.push_back(result(id, ctx, alt_inverse_sum(ctx), -q + p * q * q * inv2 - p * s * e));
        return;
    case CongruenceId::b6: {
        Residue lhs(ctx.mod());
        for (std::int64_t i = 1; i <= ctx.quarter(); ++i) {
            lhs += ctx.inv(P - 4 * i);
        }
        const Residue rhs = ctx.r(3) * ctx.r(4).inverse() * q - ctx.r(3) * ctx.r(8).inverse() * p * q * q;
        out.push_back(result(id, ctx, lhs, rhs));
        return;
    }
    case CongruenceId::b8:
        out.push_back(result(id, ctx, ctx.h2(ctx.quarter()), s * ctx.r(4) * e));
        return;
    case CongruenceId::b9:
        out.push_back(result(id, ctx, ctx.h1(ctx.quarter()),
                             ctx.r(-3) * q + ctx.r(3) * inv2 * p * q * q - p * s * e));
        return;
    case CongruenceId::b11:
        out.push_back(result(id, ctx, ctx.h1(ctx.half()), ctx.r(-2) * q + p * q * q));
        return;
    case CongruenceId::c4:
        for (std::int64_t i = 0; i <= ctx.half(); ++i) {
            const Residue lhs = alternating(ctx, i) * ctx.r(P - i) * ctx.binom(3 * i, i) * ctx.binom(P + 2 * i, 3 * i);
            const Residue rhs = p + p2 * ctx.harmonic_gap(i) + p3 * inv2 * ctx.harmonic_gap2(i);
            out.push_back(result(id, ctx, lhs, rhs, i));
        }
        return;
    case CongruenceId::c5: {
        const std::int64_t h = ctx.half();
        for (std::int64_t i = 0; i <= h; ++i) {
            const Residue lhs = alternating(ctx, i) * ctx.binom(h, i) * ctx.binom(h + i, i);
            out.push_back(result(id, ctx, lhs, ctx.central_square_term(i), i));
        }
        return;
    }
    case CongruenceId::c6: {
        const Residue lhs = central_sum(ctx, [&](std::int64_t i) { return ctx.harmonic_gap(i); });
        out.push_back(result(id, ctx, lhs, -s * alt_inverse_sum(ctx)));
        return;
    }
    case CongruenceId::c7: {
        const Residue lhs = central_sum(ctx, [&](std::int64_t i) { return ctx.harmonic_gap2(i); });
        out.push_back(
            result(id, ctx, lhs, ctx.r(2) * s * (alt_inverse_square_sum(ctx) + alt_weighted_sum(ctx))));
        return;
    }
    case CongruenceId::c8: {
        const Residue lhs = central_sum(ctx, [&](std::int64_t i) { return ctx.harmonic_gap(i); });
        out.push_back(result(id, ctx, lhs, -s * (-q + p * q * q * inv2) + p * e));
        return;
    }
    case CongruenceId::c9: {
        const Residue lhs = central_sum(ctx, [&](std::int64_t i) { return ctx.harmonic_gap2(i); });
        out.push_back(result(id, ctx, lhs, s * q * q + ctx.r(6) * e));
        return;
    }
    case CongruenceId::c10: {
        const Residue lhs = central_sum(ctx, [&](std::int64_t) { return ctx.r(1); });
        out.push_back(result(id, ctx, lhs, s + p2 * e));
        return;
    }
    case CongruenceId::c11: {
        Residue lhs(ctx.mod());
        for (std::int64_t i = 0; i <= ctx.half(); ++i) {
            lhs += ctx.rearranged_term(i);
        }
        out.push_back(result(id, ctx, lhs, s * p + ctx.r(5) * p3 * e));
        return;
    }
    case CongruenceId::c12: {
        Residue lhs(ctx.mod());
        for (std::int64_t i = ctx.half() + 1; i <= P - 1; ++i) {
            lhs += ctx.rearranged_term(i);
        }
        out.push_back(result(id, ctx, lhs, ctx.r(-4) * p3 * e));
        return;
    }
    case CongruenceId::c12_input: {
        Residue lhs(ctx.mod());
        for (std::int64_t i = ctx.half() + 1; i <= P - 1; ++i) {
            lhs += ctx.central_square_term(i);
        }
        out.push_back(result(id, ctx, lhs, ctx.r(-2) * p2 * e));
        return;
    }
    case CongruenceId::d4:
        for (std::int64_t i = 0; i <= ctx.half(); ++i) {
            const Residue lhs = ctx.r(P - 2 * i) * ctx.binom(3 * i, i) * ctx.binom(P + i, 3 * i);
            const Residue rhs = p - p2 * ctx.harmonic_gap(i) + p3 * inv2 * ctx.harmonic_gap2(i);
            out.push_back(result(id, ctx, lhs, rhs, i));
        }
        return;
    case CongruenceId::d5: {
        const Residue inner = central_sum(
            ctx, [&](std::int64_t i) { return ctx.r(1) - p * ctx.harmonic_gap(i) + p2 * inv2 * ctx.harmonic_gap2(i); });
        out.push_back(result(id, ctx, weighted_domb_sum(ctx, 3, 2, -2), ctx.r(2).pow(ctx.p()) * p * inner));
        return;
    }
    }
}

std::vector<Residue> reduce_dombs(const PrimeContext& ctx, std::span<const Integer> values)
{
    if (values.size() < ctx.p()) {
        throw Error(Errc::bad_index, "need Domb(0.." + std::to_string(ctx.p() - 1) + ")");
    }
    std::vector<Residue> out;
    for (std::size_t k = 0; k < ctx.p(); ++k) {
        out.emplace_back(ctx.mod(), values[k]);
    }
    return out;
}

CongruenceResult single(CongruenceId id, std::uint64_t p)
{
    auto results = verify_at_prime({id}, p);
    return results.front();
}

} // namespace

std::string_view to_string(CongruenceId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

std::optional<CongruenceId> parse_congruence_id(std::string_view tag) noexcept
{
    for (std::size_t k = 0; k < kNames.size(); ++k) {
        if (kNames[k] == tag) {
            return static_cast<CongruenceId>(k);
        }
    }
    return std::nullopt;
}

unsigned required_power(CongruenceId id) noexcept { return kPowers[static_cast<std::size_t>(id)]; }

bool is_per_index(CongruenceId id) noexcept
{
    return id == CongruenceId::c4 || id == CongruenceId::c5 || id == CongruenceId::d4;
}

void require_sweep_prime(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    }
    if (p < 5) {
        throw Error(Errc::p_too_small, "p = " + std::to_string(p) + " < 5");
    }
}

CongruenceResult verify_thm1(std::uint64_t p) { return single(CongruenceId::thm1, p); }
CongruenceResult verify_thm2(std::uint64_t p) { return single(CongruenceId::thm2, p); }

CongruenceResult verify_thm1(std::uint64_t p, std::span<const Integer> domb_values)
{
    require_sweep_prime(p);
    PrimeContext ctx(p);
    ctx.set_domb(reduce_dombs(ctx, domb_values));
    std::vector<CongruenceResult> out;
    evaluate(CongruenceId::thm1, ctx, out);
    return out.front();
}

CongruenceResult verify_thm2(std::uint64_t p, std::span<const Integer> domb_values)
{
    require_sweep_prime(p);
    PrimeContext ctx(p);
    ctx.set_domb(reduce_dombs(ctx, domb_values));
    std::vector<CongruenceResult> out;
    evaluate(CongruenceId::thm2, ctx, out);
    return out.front();
}

CongruenceResult verify_lemma(CongruenceId id, std::uint64_t p)
{
    switch (id) {
    case CongruenceId::b3:
    case CongruenceId::b4:
    case CongruenceId::b5:
    case CongruenceId::b6:
    case CongruenceId::b8:
    case CongruenceId::b9:
    case CongruenceId::b11: return single(id, p);
    default: throw Error(Errc::unknown_id, std::string(to_string(id)) + " is not a lemma congruence");
    }
}

std::vector<CongruenceResult> verify_proof_step(CongruenceId id, std::uint64_t p)
{
    if (id < CongruenceId::c4) {
        throw Error(Errc::unknown_id, std::string(to_string(id)) + " is not a proof step");
    }
    return verify_at_prime({id}, p);
}

std::vector<CongruenceResult> verify_at_prime(const std::vector<CongruenceId>& ids, std::uint64_t p)
{
    require_sweep_prime(p);
    std::vector<CongruenceId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<CongruenceResult> out;
    if (sorted.empty()) {
        return out;
    }
    PrimeContext ctx(p);
    for (const CongruenceId id : sorted) {
        evaluate(id, ctx, out);
    }
    return out;
}

std::vector<CongruenceResult> sweep(const std::vector<CongruenceId>& ids, std::uint64_t p_lo, std::uint64_t p_hi,
                                    unsigned jobs)
{
    if (p_lo > p_hi) {
        throw Error(Errc::bad_range, "[" + std::to_string(p_lo) + ", " + std::to_string(p_hi) + "]");
    }
    if (p_lo < 5) {
        throw Error(Errc::p_too_small, "sweep starts at p = " + std::to_string(p_lo));
    }
    if (ids.empty()) {
        return {};
    }
    const auto primes = primes_in_range(p_lo, p_hi);
    auto per_prime = parallel_map(primes.size(), jobs, [&](std::size_t k) { return verify_at_prime(ids, primes[k]); });
    std::vector<CongruenceResult> out;
    for (auto& chunk : per_prime) {
        for (auto& r : chunk) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace supercong
