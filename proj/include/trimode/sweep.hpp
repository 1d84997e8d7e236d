#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trimode/params.hpp"
#include "trimode/response.hpp"

namespace trimode {

// Inclusive sample range; n = 1 collapses to the single point lo.
struct range_spec {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 1;

    std::vector<double> grid() const;      // linear spacing
    std::vector<double> log_grid() const;  // geometric spacing, needs lo > 0
};

// One point of the two-phonon resonance manifold omega_2 = 2 omega_1.
struct resonance_point {
    double abs_delta = 0.0;
    double g2_res = 0.0;   // dressed coupling G2 solving the condition
    vec3 omega{};          // polariton frequencies at the solution
    double residual = 0.0; // |omega_2 - 2 omega_1| after re-diagonalization
};

struct resonance_trace {
    std::vector<resonance_point> points;
    std::vector<double> no_root;  // |delta| samples without a bracketed root
};

// Solve omega_2(G2) = 2 omega_1(G2) at fixed |delta| by bracketing and
// bisection on G2 in (0, G_stab). The ratio G1/G2 is pinned to g1/g2.
// Returns nullopt when no sign change exists in the stable interval.
std::optional<resonance_point> solve_resonance(const system_params& base,
                                               double abs_delta);

resonance_trace trace_resonance(const system_params& base, const range_spec& deltas);

// Response quantities along a traced locus, with the G_max feasibility cut.
struct locus_sample {
    resonance_point pt;
    linear_response lin;
    double g211 = 0.0;
    double c_eff1 = 0.0;
    double c_eff2 = 0.0;
    bool feasible = false;  // max(G1, G2) <= g_max
    bool starred = false;   // feasible maximum of C_eff,2 (smallest |delta| on ties)
};

std::vector<locus_sample> cooperativity_trace(const system_params& base,
                                              const resonance_trace& locus,
                                              double g_max);

// Nonlinearity-strength map over the (G2, |delta|) plane at fixed ratios.
struct map_cell {
    double g2 = 0.0;
    double abs_delta = 0.0;
    bool stable = false;
    double log10_metric = 0.0;  // log10 of max|rho - rho0|; only when stable
    vec3 omega{};
};

std::vector<map_cell> map_metric(const system_params& base, const range_spec& g2s,
                                 const range_spec& deltas);

// Constrained optimum of C_eff,2 on the resonance manifold.
struct optimum_report {
    double c_tilde = 0.0;      // best C_eff,2
    double delta_opt = 0.0;    // |delta| at the optimum
    double g2_opt = 0.0;       // G2 on the locus there
    double g_opt = 0.0;        // max(G1, G2) there
    double ratio_opt = 0.0;    // omega_m2/omega_m1
    double gratio_opt = 0.0;   // g1/g2
    double g211 = 0.0;
    double kappa1 = 0.0, kappa2 = 0.0;
    double n1 = 0.0, n2 = 0.0;
    double enhancement = 0.0;    // R = (g_max/omega_m1)^2 kappa/gamma1
    double analytic_c = 0.0;     // closed-form prediction (c1 R + c2 R^(2/3))(g/kappa)^2
    double analytic_ratio = 0.0; // closed-form optimal omega_m2/omega_m1
    double two_mode_c = 0.0;     // degenerate two-mode reference (45/8)(g/kappa)^2
    double g_max = 0.0;
};

// Nested grid search: for every (ratio, g-ratio) cell the locus is traced,
// cut to max(G1, G2) <= g_max and maximized over |delta| by golden section;
// the outer argmax is refined over the ratio axis. The larger of (g1, g2)
// stays pinned to max(g1, g2) of base while their ratio varies.
// Throws empty_feasible_set when no cell has a feasible locus point.
optimum_report optimize(const system_params& base, double g_max,
                        const std::vector<double>& ratios,
                        const std::vector<double>& gratios);

// Published device parameter sets ("peterson", "teufel"), normalized to
// omega_m1 = 1. Throws unknown_scenario otherwise.
system_params scenario_params(const std::string& name, double& g_max);

// Runs optimize on a scenario with a deviation-adapted ratio grid and
// g1 = g2 fixed.
optimum_report run_scenario(const std::string& name);

} // namespace trimode
