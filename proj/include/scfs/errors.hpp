#pragma once

#include <stdexcept>
#include <string>

namespace scfs {

// Error taxonomy used across the library. Callers catch the base type or a
// specific category; the CLI maps usage problems to exit 1 and everything
// else to exit 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor/feature shapes do not line up.
struct dimension_error : error {
    using error::error;
};

// A configuration value or argument is out of its valid domain.
struct parameter_error : error {
    using error::error;
};

// An API precondition was violated (mismatched structures, non-scalar loss).
struct contract_error : error {
    using error::error;
};

// NaN/Inf encountered at an operation boundary.
struct numeric_error : error {
    using error::error;
};

// A binary file failed validation (bad magic, truncation, size mismatch).
struct format_error : error {
    using error::error;
};

// Filesystem-level failure.
struct io_error : error {
    using error::error;
};

} // namespace scfs
