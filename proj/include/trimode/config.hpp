#pragma once

#include <string>
#include <vector>

#include "trimode/params.hpp"

namespace trimode {

// Parameter source resolved from a key=value file and/or --set overrides.
// Recognized keys: omega_m1, omega_m2, g1, g2, G1, G2, N, delta, kappa,
// gamma1, gamma2, temperature, units. units is "omega_m1" (default) or "Hz";
// in Hz mode every frequency-valued input is divided by omega_m1 and
// frequency-valued outputs are scaled back by omega_m1_hz.
// N is mutually exclusive with G1/G2 and sets G_i = g_i sqrt(N).
// Unknown keys and malformed numbers raise config_error.
struct run_config {
    system_params params;
    bool si_units = false;
    double omega_m1_hz = 1.0;  // only meaningful when si_units
};

run_config parse_config(const std::vector<std::string>& file_lines,
                        const std::vector<std::string>& overrides);

// Reads path (empty path = defaults only) and applies overrides on top.
run_config load_config(const std::string& path,
                       const std::vector<std::string>& overrides);

} // namespace trimode
