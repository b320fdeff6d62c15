#pragma once

#include <stdexcept>
#include <string>

namespace salecast {

/// Bad run configuration (unknown keys, out-of-range knobs, missing sections).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing input, unreadable file). CLI maps this to
/// a usage error (exit code 2) rather than a domain error.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace salecast
