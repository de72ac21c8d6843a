#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

enum class Errc {
    syntax_error,
    invalid_modulus,
    non_monic_modulus,
    wrong_ring,
    ring_mismatch,
    not_unit,
    infinite_ring,
    precision_mismatch,
    inner_not_vanishing,
    not_vanishing,
    unsupported_ring,
    not_one,
    level_mismatch,
    precision_too_low,
    not_riordan,
    cap_exceeded,
    unbound_name,
    not_involution,
    precondition_violated,
    no_faithful_level,
    unknown_scenario,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace riordan
