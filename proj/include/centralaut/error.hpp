#pragma once

#include <stdexcept>
#include <string>

namespace centralaut {

enum class errc {
    non_prime,
    empty_exponents,
    non_positive_exponent,
    dimension_mismatch,
    not_endomorphism,       // matrix violates the divisibility pattern
    not_canonical,
    enumeration_too_large,
    exponent_too_small,
    hypothesis_violation,
    not_liftable,           // matrix violates the lifting congruences
    division_impossible,
    cocycle_identity_failed,
    not_normalized,
    group_too_large,
    not_p_central,
    precondition_not_checked,
    homomorphism_check_failed,
    not_a_p_group,
    odd_prime_required,
    invalid_input,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace centralaut
