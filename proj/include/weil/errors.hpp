#pragma once

#include <stdexcept>
#include <string>

namespace weil {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad user-supplied data (CLI exit code 1)
struct validation_error : error {
    using error::error;
};

// a documented precondition of an operation was violated
struct precondition_error : error {
    using error::error;
};

// work refused or aborted because it exceeds a configured limit (CLI exit code 2)
struct resource_limit_error : error {
    using error::error;
};

} // namespace weil
