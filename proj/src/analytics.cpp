#include "trimode/analytics.hpp"

#include <cmath>

namespace trimode {
namespace analytics {

double coeff_c0() { return std::cbrt(std::sqrt(5.0) + 1.0); }

double coeff_c1() { return 9.0 * (5.0 * std::sqrt(5.0) - 11.0) / 4.0; }

double coeff_c2() {
    return 9.0 * (7.0 - 3.0 * std::sqrt(5.0)) /
           std::cbrt(16.0 * (std::sqrt(5.0) - 1.0));
}

double damping(double G, double omega_m, double kappa, double gamma,
               double abs_delta) {
    return 4.0 * G * G * omega_m * kappa / std::pow(abs_delta, 3) + gamma;
}

double occupation1(const validated_params& p) {
    const double ds = p.delta * p.delta;
    return 1.0 / (p.gamma1 * ds / (p.kappa * p.G1 * p.G1) +
                  4.0 * p.omega_m1 / p.abs_delta);
}

double coupling211(const validated_params& p) {
    return 3.0 * p.g1 * p.G1 * p.G2 / (p.delta * p.delta);
}

double ceff2_on_resonance(double g, double G2, double abs_delta, double kappa,
                          double gamma1, double gamma2) {
    const double G2s = G2 * G2;
    const double d3 = std::pow(abs_delta, 3);
    const double num = 72.0 * kappa * g * g * G2s * G2s * G2s * d3 *
                       (1.0 + gamma1 * abs_delta * abs_delta / (2.0 * kappa * G2s) +
                        2.0 / abs_delta);
    const double d1 = 4.0 * G2s * kappa + gamma1 * d3;
    const double d2 = 8.0 * G2s * kappa + gamma2 * d3;
    return num / (d1 * d1 * d2);
}

double resonant_G2(double omega_m1, double omega_m2, double abs_delta) {
    return std::sqrt((omega_m1 - 0.5 * omega_m2) * abs_delta);
}

double resonant_delta(double omega_m1, double omega_m2, double G) {
    return G * G / (omega_m1 * (1.0 - 0.5 * omega_m2 / omega_m1));
}

double enhancement_R(double G_max, double kappa, double gamma) {
    return G_max * G_max * kappa / gamma;
}

double ctilde_optimal(double R, double g, double kappa) {
    const double gk = g / kappa;
    return (coeff_c1() * R + coeff_c2() * std::pow(R, 2.0 / 3.0)) * gk * gk;
}

double optimal_ratio(double G_max, double kappa, double gamma) {
    return 2.0 - coeff_c0() * std::cbrt(gamma / kappa) *
                     std::pow(G_max, 4.0 / 3.0);
}

double delta_star(double omega_m1, double omega_m2, double kappa, double gamma) {
    return std::sqrt(kappa / gamma * (1.0 - 0.5 * omega_m2 / omega_m1)) * omega_m1;
}

double ceff2_cubic(double g, double kappa, double abs_delta) {
    const double gk = g / kappa;
    return 9.0 / 16.0 * gk * gk * std::pow(abs_delta, 3);
}

double two_mode_ceff(double g, double kappa) {
    const double gk = g / kappa;
    return 45.0 / 8.0 * gk * gk;
}

double kappa1_opt(double omega_m2, double abs_delta, double kappa) {
    return (1.0 - 0.5 * omega_m2) * 4.0 / (abs_delta * abs_delta) * kappa;
}

} // namespace analytics
} // namespace trimode
