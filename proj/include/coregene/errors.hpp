#pragma once

#include <stdexcept>

namespace coregene {

// Error categories map onto CLI exit codes: ConfigError -> 2,
// InputError -> 3, ComputeError -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coregene
