#include "supercong/error.hpp"
#include "supercong/rational.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

namespace {

// (weight_a k + weight_b) Domb(k) / base^k as an exact fraction, then to double.
double series_term(std::int64_t k, long weight_a, long weight_b, long base, const Integer& domb_k)
{
    const Rational term(Integer(weight_a * k + weight_b) * domb_k,
                        Integer::pow(base, static_cast<unsigned long>(k)));
    return term.to_double();
}

} // namespace

double rogers_partial(std::int64_t K)
{
    if (K < 2) {
        throw Error(Errc::bad_range, "rogers_partial needs K >= 2");
    }
    const auto dombs = sequence_table(SequenceId::domb).prefix(K);
    long double partial = 0; // S_{K-1}
    for (std::int64_t k = 0; k < K; ++k) {
        partial += series_term(k, 3, 1, -32, dombs[static_cast<std::size_t>(k)]);
    }
    const long double last = series_term(K, 3, 1, -32, dombs[static_cast<std::size_t>(K)]);
    return static_cast<double>(partial + last / 2);
}

double ccl_partial(std::int64_t K)
{
    if (K < 0) {
        throw Error(Errc::bad_range, "ccl_partial needs K >= 0");
    }
    const auto dombs = sequence_table(SequenceId::domb).prefix(K);
    long double sum = 0;
    for (std::int64_t k = 0; k <= K; ++k) {
        sum += series_term(k, 5, 1, 64, dombs[static_cast<std::size_t>(k)]);
    }
    return static_cast<double>(sum);
}

} // namespace supercong
