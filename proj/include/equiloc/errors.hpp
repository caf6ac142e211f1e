// Error taxonomy for the equiloc library.
//
// Four categories, all derived from equiloc::error (itself a
// std::runtime_error): structural misuse of the API, mathematical domain
// violations, input-document validation failures (which carry the offending
// path), and requests for data the input simply does not contain.

#pragma once

#include <stdexcept>
#include <string>

namespace equiloc {

/// Base class of every exception thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// API misuse: mismatched variable lists, unknown ids, incompatible shapes.
struct structural_error : error {
    using error::error;
};

/// Mathematical preconditions violated: zero denominators, a direction
/// vector that pairs to zero where a nonzero pairing is required, a zero
/// diagonal where a basis needs a unit.
struct domain_error : error {
    using error::error;
};

/// An input document failed validation. `path` points at the offending
/// field (e.g. "fixed_points[2].weights[0]").
struct validation_error : error {
    std::string path;

    validation_error(const std::string& message, std::string path_in)
        : error(message + " (at " + path_in + ")"), path(std::move(path_in)) {}
};

/// The requested operation needs data the model does not carry
/// (e.g. edge congruences without an edge list).
struct capability_error : error {
    using error::error;
};

} // namespace equiloc
