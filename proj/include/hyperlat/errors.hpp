#pragma once

#include <stdexcept>
#include <string>

namespace hyperlat {

// Bad input: malformed config, schema violation, invalid parameter combination.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failure while computing: numerical breakdown, unattainable size, audit violation.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hyperlat
