#include "trimode/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "trimode/bogoliubov.hpp"

namespace trimode {

validated_params validate(const system_params& p) {
    std::ostringstream bad_freq, bad_damp, bad_detune, bad_coupling;

    if (!(p.omega_m1 > 0.0))
        bad_freq << " omega_m1=" << p.omega_m1;
    if (!(p.omega_m2 > 0.0) || p.omega_m2 < p.omega_m1)
        bad_freq << " omega_m2=" << p.omega_m2;

    if (p.kappa <= 0.0)
        bad_damp << " kappa=" << p.kappa;
    if (p.gamma1 < 0.0)
        bad_damp << " gamma1=" << p.gamma1;
    if (p.gamma2 < 0.0)
        bad_damp << " gamma2=" << p.gamma2;
    if (p.temperature < 0.0)
        bad_damp << " temperature=" << p.temperature;

    if (p.g1 < 0.0 || p.g2 < 0.0 || p.G1 < 0.0 || p.G2 < 0.0)
        bad_coupling << " negative coupling";
    if (p.delta >= 0.0)
        bad_detune << " delta=" << p.delta;

    // Both oscillators share the intracavity photon number: if both (g_i, G_i)
    // pairs are set, (G1/g1)^2 and (G2/g2)^2 must agree.
    if (p.g1 > 0.0 && p.g2 > 0.0 && p.G1 > 0.0 && p.G2 > 0.0) {
        const double n1 = (p.G1 / p.g1) * (p.G1 / p.g1);
        const double n2 = (p.G2 / p.g2) * (p.G2 / p.g2);
        if (std::abs(n1 - n2) > coupling_consistency_rtol * std::max(n1, n2))
            bad_coupling << " N1=" << n1 << " vs N2=" << n2;
    }

    if (bad_freq.tellp() > 0)
        throw non_positive_frequency("invalid mechanical frequencies:" + bad_freq.str());
    if (bad_damp.tellp() > 0)
        throw negative_damping("invalid damping/temperature:" + bad_damp.str());
    if (bad_detune.tellp() > 0)
        throw blue_detuned("detuning must be negative (red-detuned):" + bad_detune.str());
    if (bad_coupling.tellp() > 0)
        throw coupling_inconsistency("inconsistent couplings:" + bad_coupling.str());

    validated_params v;
    static_cast<system_params&>(v) = p;
    // Normalize every frequency-like quantity to omega_m1 = 1.
    const double s = 1.0 / p.omega_m1;
    v.omega_m1 = 1.0;
    v.omega_m2 = p.omega_m2 * s;
    v.g1 = p.g1 * s;
    v.g2 = p.g2 * s;
    v.G1 = p.G1 * s;
    v.G2 = p.G2 * s;
    v.delta = p.delta * s;
    v.kappa = p.kappa * s;
    v.gamma1 = p.gamma1 * s;
    v.gamma2 = p.gamma2 * s;
    v.temperature = p.temperature * s;
    v.abs_delta = -v.delta;
    return v;
}

bool is_stable(const validated_params& p) {
    // Closed inequality: the boundary counts as stable.
    const double lhs = 4.0 * p.G1 * p.G1 * p.omega_m2 + 4.0 * p.G2 * p.G2 * p.omega_m1;
    return lhs <= p.abs_delta * p.omega_m1 * p.omega_m2;
}

bool is_stable_exact(const validated_params& p) {
    vec3 d;
    mat3 u;
    jacobi_eigen3(build_M(p).m, d, u);
    const double lambda_min = *std::min_element(d.begin(), d.end());
    return lambda_min >= -1e-12 * p.delta * p.delta;
}

std::optional<double> photon_number(const validated_params& p) {
    if (p.g1 > 0.0 && p.G1 > 0.0)
        return (p.G1 / p.g1) * (p.G1 / p.g1);
    if (p.g2 > 0.0 && p.G2 > 0.0)
        return (p.G2 / p.g2) * (p.G2 / p.g2);
    return std::nullopt;
}

} // namespace trimode
