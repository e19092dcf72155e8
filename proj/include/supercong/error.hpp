#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supercong {

enum class Errc {
    not_invertible,
    denominator_divisible_by_p,
    p_divides_base,
    bad_range,
    not_prime,
    p_too_small,
    index_reaches_p,
    bad_index,
    even_n,
    not_integer,
    not_positive,
    modulus_mismatch,
    modulus_too_large,
    division_by_zero,
    unknown_id,
};

std::string_view to_string(Errc code) noexcept;

/// Precondition or domain failure raised by the library. Arithmetic bugs
/// (a division that the mathematics guarantees to be exact but is not) are
/// reported as std::logic_error instead.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace supercong
