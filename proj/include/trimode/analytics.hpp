#pragma once

#include "trimode/params.hpp"

namespace trimode {

// Large-detuning closed forms. All take gamma = gamma1 where the derivation
// assumed equal mechanical dampings; unequal gamma1/gamma2 are kept where the
// expressions distinguish them.
namespace analytics {

// Optimization coefficients (exact radicals):
//   c0 = (sqrt(5)+1)^(1/3), c1 = 9(5 sqrt(5)-11)/4,
//   c2 = 9(7-3 sqrt(5)) / cbrt(16(sqrt(5)-1)).
double coeff_c0();
double coeff_c1();
double coeff_c2();

// kappa_i ~ 4 G_i^2 omega_mi kappa / |delta|^3 + gamma_i, i = 1, 2.
double damping(double G, double omega_m, double kappa, double gamma,
               double abs_delta);

// n_1 ~ (gamma1 delta^2 / (kappa G1^2) + 4 omega_m1 / |delta|)^-1.
double occupation1(const validated_params& p);

// g211 ~ 3 g1 G1 G2 / delta^2.
double coupling211(const validated_params& p);

// C_eff,2 on the resonance manifold (g1 = g2 = g, omega_m2 ~ 2 omega_m1):
//   72 kappa g^2 G2^6 |delta|^3 (1 + gamma1 delta^2/(2 kappa G2^2) + 2/|delta|)
//   / [(4 G2^2 kappa + gamma1 |delta|^3)^2 (8 G2^2 kappa + gamma2 |delta|^3)]
// (omega_m1 = 1 units).
double ceff2_on_resonance(double g, double G2, double abs_delta, double kappa,
                          double gamma1, double gamma2);

// Resonant coupling G2 ~ sqrt((omega_m1 - omega_m2/2) |delta|); NaN-free only
// for omega_m2 <= 2 omega_m1.
double resonant_G2(double omega_m1, double omega_m2, double abs_delta);

// Resonant detuning |delta| ~ G^2 / (omega_m1 (1 - omega_m2/(2 omega_m1))).
double resonant_delta(double omega_m1, double omega_m2, double G);

// Enhancement factor R = (G_max/omega_m1)^2 kappa/gamma.
double enhancement_R(double G_max, double kappa, double gamma);

// Fully optimized cooperativity C~_eff,2 ~ (c1 R + c2 R^(2/3)) (g/kappa)^2.
double ctilde_optimal(double R, double g, double kappa);

// Optimal frequency ratio omega_m2/omega_m1 ~ 2 - c0 (gamma/kappa)^(1/3)
// (G_max/omega_m1)^(4/3).
double optimal_ratio(double G_max, double kappa, double gamma);

// Location of the C_eff,2 maximum along the locus,
// |delta*| ~ sqrt((kappa/gamma)(1 - omega_m2/(2 omega_m1))) omega_m1.
double delta_star(double omega_m1, double omega_m2, double kappa, double gamma);

// gamma = 0 small-|delta| branch: C_eff,2 ~ (9/16)(g/kappa)^2 |delta|^3.
double ceff2_cubic(double g, double kappa, double abs_delta);

// Two-mode reference at its own optimum: C_eff ~ (45/8)(g/kappa)^2.
double two_mode_ceff(double g, double kappa);

// Optical polariton damping at the resonant point,
// kappa_1^opt ~ (1 - omega_m2/(2 omega_m1)) (4 omega_m1^2/delta^2) kappa,
// with kappa_2^opt ~ 2 kappa_1^opt.
double kappa1_opt(double omega_m2, double abs_delta, double kappa);

} // namespace analytics
} // namespace trimode
