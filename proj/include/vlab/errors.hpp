#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

/// Failure categories surfaced by the kernel, the harness and the verifiers.
/// The CLI maps these to machine-readable {"error": code, "detail": ...} output.
enum class ErrorCode {
    degenerate_input,
    origin_not_interior,
    singular_map,
    empty_or_degenerate_intersection,
    non_convex_union,
    invalid_slab,
    wrong_dimension,
    generator_exhausted,
    unsupported_exponent,
    invalid_configuration,
    not_even,
    not_odd,
    singular_training_set,
    fit_impossible,
    parse_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace vlab
