#include "supercong/sequences.hpp"
#include "supercong/error.hpp"

namespace supercong {

BinomialTableMod::BinomialTableMod(const PrimePowerModulus& mod, std::uint64_t n_max) : mod_(mod)
{
    const std::uint64_t p = mod.p();
    unit_fact_.resize(n_max + 1);
    inv_unit_fact_.resize(n_max + 1);
    p_adic_val_.resize(n_max + 1);
    unit_fact_[0] = 1 % mod.m();
    p_adic_val_[0] = 0;
    std::vector<std::uint64_t> unit_part(n_max + 1, 1);
    for (std::uint64_t j = 1; j <= n_max; ++j) {
        std::uint64_t t = j;
        std::uint32_t v = 0;
        while (t % p == 0) {
            t /= p;
            ++v;
        }
        unit_part[j] = t % mod.m();
        unit_fact_[j] = (Residue::from_canonical(mod, unit_fact_[j - 1]) *
                         Residue::from_canonical(mod, unit_part[j]))
                            .value();
        p_adic_val_[j] = p_adic_val_[j - 1] + v;
    }
    inv_unit_fact_[n_max] = Residue::from_canonical(mod, unit_fact_[n_max]).inverse().value();
    for (std::uint64_t j = n_max; j > 0; --j) {
        inv_unit_fact_[j - 1] = (Residue::from_canonical(mod, inv_unit_fact_[j]) *
                                 Residue::from_canonical(mod, unit_part[j]))
                                    .value();
    }
    Residue pw(mod, std::int64_t{1});
    for (unsigned e = 0; e < mod.k(); ++e) {
        p_powers_.push_back(pw);
        pw *= Residue(mod, static_cast<std::int64_t>(p));
    }
}

Residue BinomialTableMod::operator()(std::int64_t n, std::int64_t r) const
{
    if (n < 0 || static_cast<std::uint64_t>(n) > n_max()) {
        throw Error(Errc::bad_index, "binomial table argument " + std::to_string(n) + " outside [0, " +
                                         std::to_string(n_max()) + "]");
    }
    if (r < 0 || r > n) {
        return Residue(mod_);
    }
    const auto un = static_cast<std::size_t>(n);
    const auto ur = static_cast<std::size_t>(r);
    const std::uint32_t v = p_adic_val_[un] - p_adic_val_[ur] - p_adic_val_[un - ur];
    if (v >= mod_.k()) {
        return Residue(mod_);
    }
    return Residue::from_canonical(mod_, unit_fact_[un]) * Residue::from_canonical(mod_, inv_unit_fact_[ur]) *
           Residue::from_canonical(mod_, inv_unit_fact_[un - ur]) * p_powers_[v];
}

} // namespace supercong
