#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <numbers>
#include <string_view>
#include <vector>

#include "supercong/integer.hpp"
#include "supercong/residue.hpp"

namespace supercong {

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

/// Domb(n) = sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k) by direct summation.
Integer domb(std::int64_t n);

/// Chan-Zudilin form: sum_k (-1)^k C(n+2k,3k) C(2k,k)^2 C(3k,k) 16^{n-k}.
Integer domb_via_cz(std::int64_t n);

/// Z.-H. Sun form: sum_{k<=n/2} C(2k,k)^2 C(3k,k) C(n+k,3k) 4^{n-2k}.
Integer domb_via_sunzh(std::int64_t n);

/// Chan-Tanigawa-Yang-Zudilin form: (-1)^n sum_k C(n,k) C(n+k,k) (-8)^{n-k} f_k.
Integer domb_via_ctyz(std::int64_t n);

/// Franel number f_n = sum_k C(n,k)^3.
Integer franel(std::int64_t n);

/// C(2i, i) / (i + 1); the division is checked to be exact.
Integer catalan(std::int64_t i);

Integer central_binomial(std::int64_t i);

/// Euler (secant) numbers: E_0 = 1, E_odd = 0, sum_{j<=m} C(2m,2j) E_{2j} = 0.
Integer euler_number(std::int64_t n);

/// E_n mod p from the same recurrence run in Z/p.
Residue euler_number_mod(std::int64_t n, std::uint64_t p);

enum class SequenceId { domb, franel, catalan, euler, central_binomial };

std::string_view to_string(SequenceId id) noexcept;

/// Memoized prefix of an integer sequence. Extension appends under a lock,
/// so concurrent readers always observe a consistent prefix and existing
/// entries never change.
class SequenceTable {
public:
    explicit SequenceTable(SequenceId id) : id_(id) {}

    SequenceTable(const SequenceTable&) = delete;
    SequenceTable& operator=(const SequenceTable&) = delete;

    SequenceId id() const noexcept { return id_; }

    /// Value at index n, extending the table as needed.
    Integer at(std::int64_t n);
    /// Copy of values[0..=n].
    std::vector<Integer> prefix(std::int64_t n);
    /// Highest memoized index, or -1 when empty.
    std::int64_t max_index() const;

private:
    void extend_locked(std::int64_t n);

    SequenceId id_;
    mutable std::mutex mutex_;
    std::vector<Integer> values_;
};

/// Process-wide memo tables shared by every module.
SequenceTable& sequence_table(SequenceId id);

/// Mean of consecutive partial sums S_{K-1}, S_K of
/// sum_k (3k+1) Domb(k) / (-32)^k. Each term is formed exactly before
/// conversion to double. K >= 2.
double rogers_partial(std::int64_t K);

/// Partial sum through k = K of sum_k (5k+1) Domb(k) / 64^k. K >= 0.
double ccl_partial(std::int64_t K);

/// Limits of the two series: 2/pi and 8/(sqrt(3) pi).
inline constexpr double kRogersLimit = 2.0 * std::numbers::inv_pi;
inline constexpr double kCclLimit = 8.0 * std::numbers::inv_pi * std::numbers::inv_sqrt3;

/// Binomial coefficients modulo p^k for arguments up to n_max. Factorials
/// are split into a p-power and a unit part, so C(n, r) is exact modulo p^k
/// even when p divides n!.
class BinomialTableMod {
public:
    BinomialTableMod(const PrimePowerModulus& mod, std::uint64_t n_max);

    Residue operator()(std::int64_t n, std::int64_t r) const;

    std::uint64_t n_max() const noexcept { return unit_fact_.size() - 1; }
    const PrimePowerModulus& modulus() const noexcept { return mod_; }

private:
    PrimePowerModulus mod_;
    std::vector<std::uint64_t> unit_fact_;
    std::vector<std::uint64_t> inv_unit_fact_;
    std::vector<std::uint32_t> p_adic_val_;
    std::vector<Residue> p_powers_;
};

} // namespace supercong
