#pragma once

#include <stdexcept>
#include <string>

namespace parred {

// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

#define PARRED_ERROR(Name)                                        \
    class Name : public error {                                   \
    public:                                                       \
        explicit Name(const std::string& msg) : error(msg) {}     \
    }

PARRED_ERROR(not_finite_type);
PARRED_ERROR(invalid_preset);
PARRED_ERROR(not_a_root);
PARRED_ERROR(index_out_of_range);
PARRED_ERROR(dimension_mismatch);
PARRED_ERROR(mixed_parabolics);
PARRED_ERROR(not_nested);
PARRED_ERROR(not_comparable);
PARRED_ERROR(hypothesis_failed);
PARRED_ERROR(class_mismatch);
PARRED_ERROR(unbounded_polytope);
PARRED_ERROR(no_dominating_minimal_type);
PARRED_ERROR(cap_violated);
PARRED_ERROR(non_integral_expansion);
PARRED_ERROR(non_integral_exponent);
PARRED_ERROR(window_overflow);
PARRED_ERROR(window_too_small);
PARRED_ERROR(field_unsupported);
PARRED_ERROR(overflow_guard);
PARRED_ERROR(config_error);
PARRED_ERROR(internal_error);

#undef PARRED_ERROR

} // namespace parred
