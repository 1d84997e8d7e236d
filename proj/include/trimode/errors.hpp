#pragma once

#include <stdexcept>
#include <string>

namespace trimode {

// Base class for all physics/validation failures raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- parameter validation ---
struct non_positive_frequency : error {
    using error::error;
};
struct negative_damping : error {
    using error::error;
};
struct blue_detuned : error {
    using error::error;
};
struct coupling_inconsistency : error {
    using error::error;
};

// --- spectrum / transformation ---
struct unstable_spectrum : error {
    using error::error;
};
struct negative_squared_frequency : error {
    using error::error;
};
struct degenerate_rotation : error {
    using error::error;
};
struct not_degenerate : error {
    using error::error;
};

// --- response ---
struct negative_population_inversion : error {
    using error::error;
};

// --- sweeps / scenarios ---
struct empty_feasible_set : error {
    using error::error;
};
struct unknown_scenario : error {
    using error::error;
};

// --- configuration ---
struct config_error : error {
    using error::error;
};

} // namespace trimode
