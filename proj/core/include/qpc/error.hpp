#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

enum class Errc {
    parse_error,
    degenerate_polygon,
    not_full_dimensional,
    origin_not_interior,
    non_integral_vertex,
    non_primitive_vertex,
    degenerate_cone,
    non_integral_residue,
    factor_too_long,
    vertex_not_covered,
    invalid_mutation_data,
    inconsistent_fit,
    not_periodic,
    leading_coefficient_mismatch,
    non_convex_image,
    not_reachable,
    invariant_violation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace qpc
