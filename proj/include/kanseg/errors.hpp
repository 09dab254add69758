#pragma once

#include <stdexcept>
#include <string>

namespace kanseg {

// Shape/axis mismatches between tensors. Messages name the offending axes.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call arguments (indices out of range, empty inputs, invalid factors).
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration objects (grids, model configs, config files).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Misuse of stateful objects (double backward on a tape).
struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Corrupt or mismatched files (tiles, manifests, checkpoints).
struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values where finite math is required (NaN loss, Inf activations).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kanseg
