#pragma once

#include <stdexcept>
#include <string>

namespace trinv {

// Stable error taxonomy. Every failure that can cross the library boundary
// carries one of these codes; the CLI maps them to exit codes 1:1.
enum class errc {
    ok = 0,
    usage_error,
    bad_field_spec,
    mixed_fields,
    exponent_overflow,
    division_by_zero,
    not_divisible,
    zero_input,
    wrong_subring,
    not_triangular,
    not_invertible,
    not_involution,
    not_invariant,
    not_in_fixed_ring,
    budget_exceeded,
    degree_not_preserved,
    field_not_prime,
    syntax_error,
    unknown_variable,
    field_mismatch,
    duplicate_assignment,
    missing_variable,
    internal_error,
    internal_invariant_violation,
};

const char* errc_name(errc c) noexcept;
int exit_code(errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// A contradiction with a statement the library relies on being true of every
// verified involution. This is never a user error: anything throwing it has
// found a bug and must surface loudly instead of being folded into normal
// error handling.
class InternalInvariantViolation : public Error {
public:
    explicit InternalInvariantViolation(const std::string& message)
        : Error(errc::internal_invariant_violation, message) {}
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace trinv
