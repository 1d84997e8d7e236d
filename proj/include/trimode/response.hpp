#pragma once

#include <complex>
#include <vector>

#include "trimode/bogoliubov.hpp"

namespace trimode {

// Polariton linear response: effective dampings and steady-state occupations.
struct linear_response {
    vec3 kappa_i{};  // polariton dampings
    vec3 n_i{};      // polariton occupations (quantum heating + thermal)
};

// Everything second order in the cubic interaction.
struct nonlinear_response {
    double g211 = 0.0;                // effective c2 -> c1 c1 coupling
    double c_eff1 = 0.0, c_eff2 = 0.0;
    double delta1 = 0.0, delta2 = 0.0;  // predicted peak splittings
    bool resolved1 = false, resolved2 = false;  // delta_i >= kappa_i
    bool negative_cooperativity = false;        // n1 < n2 encountered
};

// Bose occupation at temperature T (units omega_m1); zero at T = 0.
double bose_occupation(double omega, double temperature);

// kappa_i = kappa (V3i^2 - V3,i+3^2) + sum_j gamma_j (Vji + Vj,i+3)^2
vec3 polariton_dampings(const polariton_basis& b, const validated_params& p);

// n_i = (kappa/kappa_i) V3,i+3^2
//     + sum_j (gamma_j/kappa_i) (Vji + Vj,i+3)^2 n_B(omega_i)
vec3 polariton_occupations(const polariton_basis& b, const vec3& kappa_i,
                           const validated_params& p);

// g211 = sum_{i=1,2} g_i [ (V31 V32 + V34 V35)(Vi1 + Vi4) + V31 V34 (Vi2 + Vi5) ]
double g211(const polariton_basis& b, const validated_params& p);

// Retarded self-energies of polaritons 1 and 2 (polariton 3 has none):
//   Sigma1(w) = 4 g211^2 (n1 - n2) / (w + w1 - w2 + i(k1+k2)/2)
//   Sigma2(w) = 4 g211^2 (n1 + 1/2) / (w - 2 w1 + i k1)
struct self_energies {
    double g211 = 0.0;
    vec3 omega{};
    vec3 kappa_i{};
    vec3 n_i{};

    std::complex<double> sigma1(double w) const;
    std::complex<double> sigma2(double w) const;
};

// Cavity density of states
//   rho_d(w) = -(1/pi) Im sum_i [ V3i^2 G^R[ci,ci^;w] + V3,i+3^2 G^R[ci^,ci;w] ]
// with G^R[ci,ci^;w] = 1/(w - w_i + i k_i/2 - Sigma_i(w)) and
// G^R[ci^,ci;w] = conj(G^R[ci,ci^;-w]). include_nl = false gives rho_d^0.
double cavity_dos(double w, const polariton_basis& b, const self_energies& se,
                  bool include_nl);

// Frequency grid resolving each polariton linewidth: fine windows of
// half-width 20*(local width) at step (local width)/20 around omega_i,
// 2*omega_1 and omega_2 - omega_1, joined to a coarse background by a
// geometric fade-out (used by the full-line DOS serialization).
struct frequency_grid {
    std::vector<double> points;       // ascending, symmetric about 0
    std::vector<double> scan_points;  // fine-window subset used for metric_I
    bool overlap_warning = false;     // omega_2 / 2 omega_1 windows inside omega_3's
};

frequency_grid make_adaptive_grid(const polariton_basis& b, const vec3& kappa_i,
                                  double split_hint);

// I = max over the scan windows of |rho_d - rho_d^0|.
double metric_I(const polariton_basis& b, const self_energies& se,
                const frequency_grid& grid);

// C_eff,1 = 16 g211^2 (n1 - n2) / (k1 (k1 + k2)),
// C_eff,2 =  4 g211^2 (1 + 2 n1) / (k1 k2).
// Sets negative_cooperativity instead of clamping when n1 < n2.
nonlinear_response cooperativities(double g211_value, const vec3& kappa_i,
                                   const vec3& n_i);

// delta_1 = 4 g211 sqrt(n1 - n2), delta_2 = 4 g211 sqrt(n1 + 1/2), with
// resolved flags delta_i >= kappa_i. Throws negative_population_inversion
// when n1 < n2.
void peak_splittings(nonlinear_response& nl, const vec3& kappa_i, const vec3& n_i);

// Local maxima of rho_d(w) on [lo, hi] at the given step, refined by
// quadratic interpolation through each discrete peak.
std::vector<double> find_peaks(const polariton_basis& b, const self_energies& se,
                               double lo, double hi, double step);

// Convenience: full pipeline at one parameter point.
struct response_state {
    polariton_basis basis;
    linear_response lin;
    nonlinear_response nl;
    self_energies se;
};
response_state evaluate_response(const validated_params& p);

} // namespace trimode
