#pragma once

#include <optional>

#include "trimode/errors.hpp"

namespace trimode {

// Physical parameters of the driven three-mode system in units of omega_m1.
// Conventions: red-detuned drive (delta < 0), omega_m2 >= omega_m1,
// dressed couplings G_i = g_i * sqrt(N) with N the intracavity photon number.
struct system_params {
    double omega_m1 = 1.0;  // mechanical frequency 1 (the unit)
    double omega_m2 = 2.0;  // mechanical frequency 2
    double g1 = 0.0;        // single-photon coupling, oscillator 1
    double g2 = 0.0;        // single-photon coupling, oscillator 2
    double G1 = 0.0;        // dressed coupling g1*sqrt(N)
    double G2 = 0.0;        // dressed coupling g2*sqrt(N)
    double delta = -10.0;   // detuning omega_l - omega_c < 0
    double kappa = 0.02;    // cavity damping
    double gamma1 = 0.0;    // mechanical damping 1
    double gamma2 = 0.0;    // mechanical damping 2
    double temperature = 0.0;  // mechanical bath temperature (cavity bath at T=0)
};

// Parameters that passed validate(); frequencies normalized to omega_m1 = 1.
struct validated_params : system_params {
    double abs_delta = 0.0;  // |delta|, cached
};

// Relative tolerance for the shared-photon-number consistency check
// N = (G1/g1)^2 = (G2/g2)^2. Loose enough for round-trips through text configs.
inline constexpr double coupling_consistency_rtol = 1e-9;

// Checks invariants, normalizes to omega_m1 = 1 and caches |delta|.
// Throws non_positive_frequency, negative_damping, blue_detuned or
// coupling_inconsistency, listing every violated condition.
validated_params validate(const system_params& p);

// Large-detuning stability condition:
//   4 G1^2 omega_m2 + 4 G2^2 omega_m1 <= |delta| omega_m1 omega_m2,
// boundary included. Equivalent to det M >= 0 for the coupling matrix M.
bool is_stable(const validated_params& p);

// Exact criterion: smallest eigenvalue of M is >= -1e-12 * delta^2.
bool is_stable_exact(const validated_params& p);

// Shared photon number N = (G/g)^2, if any coupling pair defines it.
std::optional<double> photon_number(const validated_params& p);

} // namespace trimode
