#include "supercong/sequences.hpp"
#include "supercong/error.hpp"

#include <array>
#include <string>

namespace supercong {

namespace {

void require_index(std::int64_t n, const char* what)
{
    if (n < 0) {
        throw Error(Errc::bad_index, std::string(what) + " index " + std::to_string(n) + " < 0");
    }
}

// Domb(n) from memoized central binomials; the summand is symmetric under
// k <-> n-k, so only half of the terms are formed.
Integer domb_direct(std::int64_t n, const std::vector<Integer>& central)
{
    mpz_class sum = 0;
    mpz_class row = 1; // C(n, k)
    mpz_class term;
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        term = row * row;
        term *= central[static_cast<std::size_t>(k)].raw();
        term *= central[static_cast<std::size_t>(n - k)].raw();
        if (2 * k == n) {
            sum += term;
        } else {
            sum += 2 * term;
        }
        row *= static_cast<unsigned long>(n - k);
        mpz_divexact_ui(row.get_mpz_t(), row.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return Integer(std::move(sum));
}

Integer franel_direct(std::int64_t n)
{
    mpz_class sum = 0;
    mpz_class row = 1;
    for (std::int64_t k = 0; k <= n; ++k) {
        sum += row * row * row;
        row *= static_cast<unsigned long>(n - k);
        mpz_divexact_ui(row.get_mpz_t(), row.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return Integer(std::move(sum));
}

} // namespace

std::string_view to_string(SequenceId id) noexcept
{
    switch (id) {
    case SequenceId::domb: return "domb";
    case SequenceId::franel: return "franel";
    case SequenceId::catalan: return "catalan";
    case SequenceId::euler: return "euler";
    case SequenceId::central_binomial: return "central_binomial";
    }
    return "unknown";
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    require_index(n, "binomial");
    if (k < 0 || k > n) {
        return Integer(0);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Integer(std::move(r));
}

Integer SequenceTable::at(std::int64_t n)
{
    require_index(n, to_string(id_).data());
    std::lock_guard lock(mutex_);
    extend_locked(n);
    return values_[static_cast<std::size_t>(n)];
}

std::vector<Integer> SequenceTable::prefix(std::int64_t n)
{
    require_index(n, to_string(id_).data());
    std::lock_guard lock(mutex_);
    extend_locked(n);
    return {values_.begin(), values_.begin() + n + 1};
}

std::int64_t SequenceTable::max_index() const
{
    std::lock_guard lock(mutex_);
    return static_cast<std::int64_t>(values_.size()) - 1;
}

void SequenceTable::extend_locked(std::int64_t n)
{
    auto next = static_cast<std::int64_t>(values_.size());
    if (next > n) {
        return;
    }
    values_.reserve(static_cast<std::size_t>(n + 1));
    switch (id_) {
    case SequenceId::central_binomial:
        for (; next <= n; ++next) {
            if (next == 0) {
                values_.emplace_back(1);
                continue;
            }
            mpz_class c = values_.back().raw() * static_cast<unsigned long>(2 * (2 * next - 1));
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(next));
            values_.emplace_back(std::move(c));
        }
        break;
    case SequenceId::domb: {
        const auto central = sequence_table(SequenceId::central_binomial).prefix(n);
        for (; next <= n; ++next) {
            values_.push_back(domb_direct(next, central));
        }
        break;
    }
    case SequenceId::franel:
        for (; next <= n; ++next) {
            values_.push_back(franel_direct(next));
        }
        break;
    case SequenceId::catalan: {
        const auto central = sequence_table(SequenceId::central_binomial).prefix(n);
        for (; next <= n; ++next) {
            values_.push_back(divide_exact(central[static_cast<std::size_t>(next)], Integer(next + 1)));
        }
        break;
    }
    case SequenceId::euler:
        for (; next <= n; ++next) {
            if (next % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            if (next == 0) {
                values_.emplace_back(1);
                continue;
            }
            // E_{2m} = -sum_{j<m} C(2m, 2j) E_{2j}
            Integer acc(0);
            for (std::int64_t j = 0; j < next; j += 2) {
                acc += binomial(next, j) * values_[static_cast<std::size_t>(j)];
            }
            values_.push_back(-acc);
        }
        break;
    }
}

SequenceTable& sequence_table(SequenceId id)
{
    static std::array<SequenceTable, 5> tables{
        SequenceTable(SequenceId::domb),    SequenceTable(SequenceId::franel),
        SequenceTable(SequenceId::catalan), SequenceTable(SequenceId::euler),
        SequenceTable(SequenceId::central_binomial),
    };
    return tables[static_cast<std::size_t>(id)];
}

Integer domb(std::int64_t n) { return sequence_table(SequenceId::domb).at(n); }
Integer franel(std::int64_t n) { return sequence_table(SequenceId::franel).at(n); }
Integer catalan(std::int64_t i) { return sequence_table(SequenceId::catalan).at(i); }
Integer central_binomial(std::int64_t i) { return sequence_table(SequenceId::central_binomial).at(i); }
Integer euler_number(std::int64_t n) { return sequence_table(SequenceId::euler).at(n); }

Integer domb_via_cz(std::int64_t n)
{
    require_index(n, "domb_via_cz");
    Integer sum(0);
    for (std::int64_t k = 0; k <= n; ++k) {
        const Integer c = central_binomial(k);
        Integer term = binomial(n + 2 * k, 3 * k) * c * c * binomial(3 * k, k) *
                       Integer::pow(16, static_cast<unsigned long>(n - k));
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Integer domb_via_sunzh(std::int64_t n)
{
    require_index(n, "domb_via_sunzh");
    Integer sum(0);
    for (std::int64_t k = 0; 2 * k <= n; ++k) {
        const Integer c = central_binomial(k);
        sum += c * c * binomial(3 * k, k) * binomial(n + k, 3 * k) *
               Integer::pow(4, static_cast<unsigned long>(n - 2 * k));
    }
    return sum;
}

Integer domb_via_ctyz(std::int64_t n)
{
    require_index(n, "domb_via_ctyz");
    Integer sum(0);
    for (std::int64_t k = 0; k <= n; ++k) {
        sum += binomial(n, k) * binomial(n + k, k) * Integer::pow(-8, static_cast<unsigned long>(n - k)) *
               franel(k);
    }
    return n % 2 == 0 ? sum : -sum;
}

Residue euler_number_mod(std::int64_t n, std::uint64_t p)
{
    require_index(n, "euler_number_mod");
    const PrimePowerModulus mod(p, 1);
    if (n % 2 == 1) {
        return Residue(mod);
    }
    // Pascal rows mod p: no division, so valid for any n.
    std::vector<std::uint64_t> row{1};
    std::vector<std::uint64_t> even_euler{1 % p}; // E_0, E_2, ...
    for (std::int64_t r = 1; r <= n; ++r) {
        row.push_back(0);
        for (std::size_t j = row.size() - 1; j > 0; --j) {
            row[j] = (row[j] + row[j - 1]) % p;
        }
        if (r % 2 == 1) {
            continue;
        }
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < even_euler.size(); ++j) {
            acc = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(row[2 * j]) * even_euler[j] + acc) % p);
        }
        even_euler.push_back(acc == 0 ? 0 : p - acc);
    }
    return Residue::from_canonical(mod, even_euler.back());
}

} // namespace supercong
