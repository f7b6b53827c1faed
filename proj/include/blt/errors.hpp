#pragma once

#include <stdexcept>
#include <string>

namespace blt {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested exhaustive computation exceeds the desk-scale guard.
/// The message carries the computed cost estimate.
struct guard_exceeded : error {
    using error::error;
};

struct zero_inverse : error {
    zero_inverse() : error("attempted to invert 0 mod p") {}
};

struct bad_prime : error {
    using error::error;
};

struct non_square : error {
    non_square() : error("operation requires a square matrix") {}
};

struct index_out_of_range : error {
    using error::error;
};

struct dim_mismatch : error {
    using error::error;
};

struct shape_mismatch : error {
    using error::error;
};

struct empty_subset : error {
    empty_subset() : error("vertex subset must be nonempty") {}
};

struct unknown_vertex : error {
    using error::error;
};

struct not_alternating : error {
    using error::error;
};

struct domain_mismatch : error {
    using error::error;
};

struct composition_mismatch : error {
    using error::error;
};

struct not_pullback_hom : error {
    using error::error;
};

/// Thrown when claim-style checks are invoked on inputs that do not satisfy
/// the stated hypotheses; the message names the first failing one.
struct hypothesis_violated : error {
    using error::error;
};

struct graphs_isomorphic : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

namespace detail {
/// Thrown to break out of visitor-style enumeration loops.
struct stop_iteration {};
} // namespace detail

} // namespace blt
