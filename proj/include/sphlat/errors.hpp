#pragma once

#include <stdexcept>
#include <string>

namespace sphlat {

// Input violates a documented precondition (bad arguments, non-coprime pair...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested sizes exceed the memory guard.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

// Lookup outside a built table.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Enumeration would exceed the point cap; message names the exact count.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature failed to reach the requested accuracy.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sphlat
