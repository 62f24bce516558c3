#include "trinv/errors.hpp"

namespace trinv {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::ok: return "ok";
        case errc::usage_error: return "UsageError";
        case errc::bad_field_spec: return "BadFieldSpec";
        case errc::mixed_fields: return "MixedFields";
        case errc::exponent_overflow: return "ExponentOverflow";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_divisible: return "NotDivisible";
        case errc::zero_input: return "ZeroInput";
        case errc::wrong_subring: return "WrongSubring";
        case errc::not_triangular: return "NotTriangular";
        case errc::not_invertible: return "NotInvertible";
        case errc::not_involution: return "NotInvolution";
        case errc::not_invariant: return "NotInvariant";
        case errc::not_in_fixed_ring: return "NotInFixedRing";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::degree_not_preserved: return "DegreeNotPreserved";
        case errc::field_not_prime: return "FieldNotPrime";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::duplicate_assignment: return "DuplicateAssignment";
        case errc::missing_variable: return "MissingVariable";
        case errc::internal_error: return "InternalError";
        case errc::internal_invariant_violation: return "InternalInvariantViolation";
    }
    return "InternalError";
}

int exit_code(errc c) noexcept {
    switch (c) {
        case errc::ok: return 0;
        case errc::usage_error: return 2;
        case errc::bad_field_spec: return 10;
        case errc::mixed_fields: return 11;
        case errc::exponent_overflow: return 12;
        case errc::division_by_zero: return 13;
        case errc::not_divisible: return 14;
        case errc::zero_input: return 15;
        case errc::wrong_subring: return 16;
        case errc::not_triangular: return 20;
        case errc::not_invertible: return 21;
        case errc::not_involution: return 22;
        case errc::not_invariant: return 30;
        case errc::not_in_fixed_ring: return 31;
        case errc::budget_exceeded: return 40;
        case errc::degree_not_preserved: return 41;
        case errc::field_not_prime: return 42;
        case errc::syntax_error: return 50;
        case errc::unknown_variable: return 51;
        case errc::field_mismatch: return 52;
        case errc::duplicate_assignment: return 53;
        case errc::missing_variable: return 54;
        case errc::internal_error: return 98;
        case errc::internal_invariant_violation: return 99;
    }
    return 98;
}

}  // namespace trinv
