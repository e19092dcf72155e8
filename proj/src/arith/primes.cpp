#include "supercong/error.hpp"
#include "supercong/residue.hpp"

namespace supercong {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    if (lo < 2 || lo > hi) {
        throw Error(Errc::bad_range, "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (is_prime(n)) {
            out.push_back(n);
        }
        if (n == hi) {
            break;
        }
    }
    return out;
}

} // namespace supercong
