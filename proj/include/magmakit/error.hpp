#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mk {

enum class Errc {
    invalid_magma,
    invalid_params,
    invalid_n,
    not_a_quasigroup,
    not_a_loop,
    not_a_group,
    no_identity,
    precondition_unmet,
    cap_exceeded,
    product_too_large,
    improper_components,
    insufficient_mix,
    overlap_violation,
    element_absent,
    not_normal,
    not_a_group_component,
    kind_mismatch,
    map_incomplete,
    parse_error,
};

std::string_view to_string(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

    // true for the resource-limit family (cli exit code 3)
    bool is_cap() const noexcept {
        return code_ == Errc::cap_exceeded || code_ == Errc::product_too_large;
    }

private:
    Errc code_;
};

}  // namespace mk
