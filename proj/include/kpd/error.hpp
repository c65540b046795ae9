#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kpd {

/// Failure categories raised by the library. One exception type carries a code
/// so callers (the CLI in particular) can map failures onto exit statuses.
enum class Errc {
    division_by_zero,
    invalid_field,
    not_enumerable,
    shape_mismatch,
    field_mismatch,
    index_out_of_range,
    invalid_argument,
    order_mismatch,
    not_in_dn,
    unsupported_field,
    sweep_too_large,
    search_too_large,
    invalid_input,
    undefined_normalization,
    parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace kpd
