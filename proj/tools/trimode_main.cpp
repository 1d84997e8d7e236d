#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trimode/analytics.hpp"
#include "trimode/bogoliubov.hpp"
#include "trimode/config.hpp"
#include "trimode/errors.hpp"
#include "trimode/params.hpp"
#include "trimode/response.hpp"
#include "trimode/sweep.hpp"

namespace {

using namespace trimode;

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
}

range_spec parse_range(const std::string& text) {
    range_spec r;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw config_error("range must be lo:hi:n, got: " + text);
    try {
        std::size_t used = 0;
        r.lo = std::stod(text.substr(0, c1), &used);
        r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &used);
        const long n = std::stol(text.substr(c2 + 1), &used);
        if (n < 1) throw config_error("range needs n >= 1: " + text);
        r.n = static_cast<std::size_t>(n);
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error("cannot parse range: " + text);
    }
    if (r.n > 1 && !(r.hi > r.lo))
        throw config_error("range needs hi > lo: " + text);
    return r;
}

// Output sink: --out file or stdout.
struct sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw config_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

struct command_io {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_path;
    std::string format = "report";
};

void add_common(CLI::App* cmd, command_io& io, const char* default_format) {
    io.format = default_format;
    cmd->add_option("--config", io.config_path, "parameter file (key = value)");
    cmd->add_option("--set", io.sets, "override key=value (repeatable)");
    cmd->add_option("--out", io.out_path, "write output to file instead of stdout");
    cmd->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"csv", "report"}));
}

std::string units_note(const run_config& cfg) {
    return cfg.si_units
               ? "# frequencies in Hz, densities of states in 1/Hz"
               : "# frequencies in units of omega_m1, densities of states in 1/omega_m1";
}

double fscale(const run_config& cfg) { return cfg.si_units ? cfg.omega_m1_hz : 1.0; }

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const run_config& cfg, const command_io& io) {
    const validated_params vp = validate(cfg.params);
    const polariton_basis b = diagonalize(build_M(vp), vp);
    const double s = fscale(cfg);

    std::optional<vec3> pert;
    try {
        pert = perturbative_frequencies(vp);
    } catch (const error&) {
        // outside the large-detuning regime; exact results stand alone
    }

    sink snk(io.out_path);
    std::ostream& os = snk.out();
    if (io.format == "csv") {
        os << units_note(cfg) << "\n";
        os << "quantity,value\n";
        for (int i = 0; i < 3; ++i)
            os << "omega_" << i + 1 << "," << fmt(b.omega[i] * s) << "\n";
        os << "stable_closed_form," << (is_stable(vp) ? 1 : 0) << "\n";
        os << "stable_exact," << (is_stable_exact(vp) ? 1 : 0) << "\n";
        os << "degenerate," << (b.degenerate ? 1 : 0) << "\n";
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                os << "u_" << i + 1 << j + 1 << "," << fmt(b.u[i][j]) << "\n";
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j)
                os << "v_" << i + 1 << j + 1 << "," << fmt(b.v[i][j]) << "\n";
        if (pert)
            for (int i = 0; i < 3; ++i)
                os << "perturbative_omega_" << i + 1 << ","
                   << fmt((*pert)[i] * s) << "\n";
        return 0;
    }

    os << "spectrum report (" << units_note(cfg).substr(2) << ")\n";
    os << "omega = " << fmt(b.omega[0] * s) << " " << fmt(b.omega[1] * s) << " "
       << fmt(b.omega[2] * s) << "\n";
    os << "stable_closed_form = " << (is_stable(vp) ? 1 : 0)
       << ", stable_exact = " << (is_stable_exact(vp) ? 1 : 0)
       << ", degenerate = " << (b.degenerate ? 1 : 0) << "\n";
    os << "U rows (modes b1, b2, d):\n";
    for (int i = 0; i < 3; ++i) {
        os << " ";
        for (int j = 0; j < 3; ++j) os << " " << fmt(b.u[i][j]);
        os << "\n";
    }
    os << "V rows (columns c1..c3, c1+..c3+):\n";
    for (int i = 0; i < 3; ++i) {
        os << " ";
        for (int j = 0; j < 6; ++j) os << " " << fmt(b.v[i][j]);
        os << "\n";
    }
    if (pert) {
        os << "perturbative omega = " << fmt((*pert)[0] * s) << " "
           << fmt((*pert)[1] * s) << " " << fmt((*pert)[2] * s) << "\n";
        os << "perturbative |error| = " << fmt(std::abs((*pert)[0] - b.omega[0]) * s)
           << " " << fmt(std::abs((*pert)[1] - b.omega[1]) * s) << " "
           << fmt(std::abs((*pert)[2] - b.omega[2]) * s) << "\n";
    } else {
        os << "perturbative omega = n/a (outside the large-detuning regime)\n";
    }
    return 0;
}

// --------------------------------------------------------------------- dos

int cmd_dos(const run_config& cfg, const command_io& io) {
    const validated_params vp = validate(cfg.params);
    const response_state st = evaluate_response(vp);
    const frequency_grid grid =
        make_adaptive_grid(st.basis, st.lin.kappa_i, st.nl.delta2);
    if (grid.overlap_warning)
        std::cerr << "warning: omega_2 and 2*omega_1 windows overlap the "
                     "omega_3 window; diagonal approximation kept\n";
    const double s = fscale(cfg);

    sink snk(io.out_path);
    std::ostream& os = snk.out();
    os << units_note(cfg) << "\n";
    os << "omega,rho0,rho,rho_minus_rho0\n";
    for (double w : grid.points) {
        const double r0 = cavity_dos(w, st.basis, st.se, false);
        const double r = cavity_dos(w, st.basis, st.se, true);
        os << fmt(w * s) << "," << fmt(r0 / s) << "," << fmt(r / s) << ","
           << fmt((r - r0) / s) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- sweep

int cmd_sweep(const run_config& cfg, const command_io& io,
              const range_spec& g2s, const range_spec& deltas) {
    const std::vector<map_cell> cells = map_metric(cfg.params, g2s, deltas);
    const double s = fscale(cfg);

    sink snk(io.out_path);
    std::ostream& os = snk.out();
    os << units_note(cfg) << "\n";
    os << "G2,delta,stable,log10_I\n";
    for (const map_cell& c : cells) {
        os << fmt(c.g2 * s) << "," << fmt(c.abs_delta * s) << ","
           << (c.stable ? 1 : 0) << ",";
        if (c.stable)
            os << fmt(c.log10_metric - (cfg.si_units ? std::log10(s) : 0.0));
        os << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- resonance

int cmd_resonance(const run_config& cfg, const command_io& io,
                  const range_spec& deltas) {
    const resonance_trace trace = trace_resonance(cfg.params, deltas);
    if (!trace.no_root.empty())
        std::cerr << "note: no resonance root at " << trace.no_root.size()
                  << " of " << deltas.n << " detuning samples\n";
    const double s = fscale(cfg);

    sink snk(io.out_path);
    std::ostream& os = snk.out();
    os << units_note(cfg) << "\n";
    os << "delta,G2_res,omega1,omega2,residual\n";
    for (const resonance_point& pt : trace.points)
        os << fmt(pt.abs_delta * s) << "," << fmt(pt.g2_res * s) << ","
           << fmt(pt.omega[0] * s) << "," << fmt(pt.omega[1] * s) << ","
           << fmt(pt.residual * s) << "\n";
    return 0;
}

// ---------------------------------------------------------------- optimize

void print_report(std::ostream& os, const run_config& cfg,
                  const optimum_report& rep) {
    const double s = fscale(cfg);
    os << "optimum report (" << units_note(cfg).substr(2) << ")\n";
    os << "C_tilde = " << fmt(rep.c_tilde) << "\n";
    os << "delta_opt = " << fmt(rep.delta_opt * s) << "\n";
    os << "G2_opt = " << fmt(rep.g2_opt * s) << "\n";
    os << "G_opt = " << fmt(rep.g_opt * s) << "\n";
    os << "ratio_opt = " << fmt(rep.ratio_opt) << "\n";
    os << "gratio_opt = " << fmt(rep.gratio_opt) << "\n";
    os << "g211 = " << fmt(rep.g211 * s) << "\n";
    os << "kappa_1 = " << fmt(rep.kappa1 * s) << ", kappa_2 = "
       << fmt(rep.kappa2 * s) << "\n";
    os << "n_1 = " << fmt(rep.n1) << ", n_2 = " << fmt(rep.n2) << "\n";
    os << "R = " << fmt(rep.enhancement) << "\n";
    os << "analytic_C_tilde = " << fmt(rep.analytic_c) << "\n";
    os << "analytic_ratio_opt = " << fmt(rep.analytic_ratio) << "\n";
    os << "two_mode_C = " << fmt(rep.two_mode_c) << "\n";
    os << "rel_C_vs_analytic = "
       << fmt(rep.c_tilde / rep.analytic_c - 1.0) << "\n";
    os << "rel_ratio_dev_vs_analytic = "
       << fmt((2.0 - rep.ratio_opt) / (2.0 - rep.analytic_ratio) - 1.0) << "\n";
    os << "g_max = " << fmt(rep.g_max * s) << "\n";
}

void print_trace_csv(std::ostream& os, const run_config& cfg,
                     const system_params& at_opt, const range_spec& deltas,
                     double g_max) {
    const resonance_trace trace = trace_resonance(at_opt, deltas);
    const std::vector<locus_sample> table =
        cooperativity_trace(at_opt, trace, g_max);
    const double s = fscale(cfg);
    os << units_note(cfg) << "\n";
    os << "delta,G2_res,g211,c_eff1,c_eff2,kappa1,kappa2,kappa3,n1,n2,n3,"
          "feasible,star\n";
    for (const locus_sample& t : table) {
        os << fmt(t.pt.abs_delta * s) << "," << fmt(t.pt.g2_res * s) << ","
           << fmt(t.g211 * s) << "," << fmt(t.c_eff1) << "," << fmt(t.c_eff2);
        for (int i = 0; i < 3; ++i) os << "," << fmt(t.lin.kappa_i[i] * s);
        for (int i = 0; i < 3; ++i) os << "," << fmt(t.lin.n_i[i]);
        os << "," << (t.feasible ? 1 : 0) << "," << (t.starred ? 1 : 0) << "\n";
    }
}

system_params params_at_optimum(const system_params& base,
                                const optimum_report& rep) {
    system_params p = base;
    const double g_base = std::max(base.g1, base.g2);
    p.omega_m2 = rep.ratio_opt * base.omega_m1;
    p.g1 = g_base * std::min(1.0, rep.gratio_opt);
    p.g2 = g_base * std::min(1.0, 1.0 / rep.gratio_opt);
    p.delta = -rep.delta_opt;
    p.G2 = rep.g2_opt;
    p.G1 = rep.gratio_opt * rep.g2_opt;
    return p;
}

int cmd_optimize(const run_config& cfg, const command_io& io, double g_max,
                 const std::optional<range_spec>& ratio_range,
                 const std::optional<range_spec>& gratio_range,
                 const range_spec& deltas) {
    const system_params& p = cfg.params;
    std::vector<double> ratios =
        ratio_range ? ratio_range->grid()
                    : std::vector<double>{p.omega_m2 / p.omega_m1};
    std::vector<double> gratios =
        gratio_range ? gratio_range->grid()
                     : std::vector<double>{p.g2 > 0.0 ? p.g1 / p.g2 : 1.0};

    const optimum_report rep = optimize(p, g_max, ratios, gratios);

    sink snk(io.out_path);
    if (io.format == "csv")
        print_trace_csv(snk.out(), cfg, params_at_optimum(p, rep), deltas, g_max);
    else
        print_report(snk.out(), cfg, rep);
    return 0;
}

int cmd_scenario(const run_config& cfg_unused, const command_io& io,
                 const std::string& name, const range_spec& deltas) {
    (void)cfg_unused;
    const optimum_report rep = run_scenario(name);
    run_config cfg;  // scenarios report in omega_m1 units
    double g_max = 0.0;
    const system_params base = scenario_params(name, g_max);

    sink snk(io.out_path);
    if (io.format == "csv")
        print_trace_csv(snk.out(), cfg, params_at_optimum(base, rep), deltas,
                        g_max);
    else
        print_report(snk.out(), cfg, rep);
    return 0;
}

// ------------------------------------------------------------------- check

struct check_tally {
    std::ostream& os;
    bool all_ok = true;
    void note(const std::string& name, bool ok, const std::string& detail = "") {
        os << "check " << name << ": " << (ok ? "PASS" : "FAIL");
        if (!ok && !detail.empty()) os << " (" << detail << ")";
        os << "\n";
        if (!ok) all_ok = false;
    }
};

system_params battery_point(double ratio, double kappa, double gamma, double g,
                            double abs_delta) {
    system_params p;
    p.omega_m2 = ratio;
    p.kappa = kappa;
    p.gamma1 = p.gamma2 = gamma;
    p.g1 = p.g2 = g;
    p.G1 = p.G2 = g;
    const auto pt = solve_resonance(p, abs_delta);
    if (pt) {
        p.delta = -abs_delta;
        p.G2 = pt->g2_res;
        p.G1 = pt->g2_res;
    }
    return p;
}

void run_battery(check_tally& tally, const std::string& label,
                 const system_params& p, bool inject_symplectic) {
    const validated_params vp = validate(p);
    const coupling_matrix M = build_M(vp);
    polariton_basis b = diagonalize(M, vp);
    if (inject_symplectic) b.v[0][0] += 1e-3;

    // eigensolver residual U^T M U = diag(omega^2)
    double resid = 0.0, mscale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    s += b.u[k][i] * M.m[k][l] * b.u[l][j];
            const double want = (i == j) ? b.omega[i] * b.omega[i] : 0.0;
            resid = std::max(resid, std::abs(s - want));
            mscale = std::max(mscale, std::abs(M.m[i][j]));
        }
    tally.note(label + "/eigensolver_residual", resid <= 1e-10 * mscale,
               fmt(resid));

    // Bogoliubov normalization V+ V+^T - V- V-^T = 1
    double bres = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                s += b.v[i][k] * b.v[j][k] - b.v[i][k + 3] * b.v[j][k + 3];
            bres = std::max(bres, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    tally.note(label + "/bogoliubov_norm", bres <= 1e-10, fmt(bres));

    // analytic sum rule
    double sum = 0.0;
    for (int i = 0; i < 3; ++i)
        sum += b.v[2][i] * b.v[2][i] - b.v[2][i + 3] * b.v[2][i + 3];
    tally.note(label + "/sum_rule_analytic", std::abs(sum - 1.0) <= 1e-8,
               fmt(sum));

    const vec3 kap = polariton_dampings(b, vp);
    const vec3 occ = polariton_occupations(b, kap, vp);
    bool ok = true;
    for (int i = 0; i < 3; ++i) ok = ok && kap[i] > 0.0 && occ[i] >= 0.0;
    tally.note(label + "/damping_occupation_signs", ok);

    const response_state st = evaluate_response(vp);
    const frequency_grid grid =
        make_adaptive_grid(st.basis, st.lin.kappa_i, st.nl.delta2);

    // retarded causality of the self-energies
    bool causal = true;
    if (st.lin.n_i[0] >= st.lin.n_i[1]) {
        for (double w : grid.scan_points)
            causal = causal && st.se.sigma1(w).imag() <= 1e-300 &&
                     st.se.sigma2(w).imag() <= 1e-300;
    }
    tally.note(label + "/self_energy_causality", causal);

    // spectral positivity on the non-negative grid
    double rho_min = 0.0;
    for (double w : grid.points) {
        if (w < 0.0) continue;
        rho_min = std::min(rho_min, cavity_dos(w, st.basis, st.se, true));
    }
    tally.note(label + "/dos_positivity", rho_min >= -1e-12, fmt(rho_min));

    // trapezoid sum rule on the full grid
    double integral = 0.0;
    for (std::size_t i = 1; i < grid.points.size(); ++i) {
        const double w0 = grid.points[i - 1], w1 = grid.points[i];
        integral += 0.5 * (w1 - w0) *
                    (cavity_dos(w0, st.basis, st.se, false) +
                     cavity_dos(w1, st.basis, st.se, false));
    }
    tally.note(label + "/sum_rule_grid", std::abs(integral - 1.0) <= 1e-3,
               fmt(integral));

    // reflection identity G^R[c+,c;w] = conj(G^R[c,c+;-w]): re-evaluate the
    // DOS in real arithmetic, Im G = -(k/2 - Im Sigma)/|den|^2, and compare
    bool reflect = true;
    for (double w : {0.1, 0.9, 1.3, 2.2, -0.7, -1.9, 3.3}) {
        double alt = 0.0;
        for (int i = 0; i < 3; ++i) {
            auto im_den = [&](double x) {
                const std::complex<double> si =
                    (i == 0) ? st.se.sigma1(x)
                             : (i == 1) ? st.se.sigma2(x)
                                        : std::complex<double>(0.0);
                const double re = x - st.basis.omega[i] - si.real();
                const double im = st.lin.kappa_i[i] / 2.0 - si.imag();
                return std::pair<double, double>(im, re * re + im * im);
            };
            const auto [imp, np] = im_den(w);
            const auto [imm, nm] = im_den(-w);
            alt += b.v[2][i] * b.v[2][i] * imp / np -
                   b.v[2][i + 3] * b.v[2][i + 3] * imm / nm;
        }
        alt /= M_PI;
        const double direct = cavity_dos(w, st.basis, st.se, true);
        reflect = reflect &&
                  std::abs(alt - direct) <= 1e-12 * (std::abs(direct) + 1.0);
    }
    tally.note(label + "/greens_reflection", reflect);

    // determinism of the serialized response
    std::ostringstream a, bstr;
    for (double w : grid.scan_points) {
        a << fmt(cavity_dos(w, st.basis, st.se, true)) << ",";
        bstr << fmt(cavity_dos(w, st.basis, st.se, true)) << ",";
    }
    tally.note(label + "/determinism", a.str() == bstr.str());
}

int cmd_check(const command_io& io, const std::string& inject) {
    sink snk(io.out_path);
    check_tally tally{snk.out()};

    run_battery(tally, "fig2",
                battery_point(1.9, 0.02, 2e-6, 2e-4, 10.0),
                inject == "symplectic");
    run_battery(tally, "fig5a",
                battery_point(1.9858, 0.02, 2e-6, 2e-3, 13.22), false);

    double g_max = 0.0;
    system_params peterson = scenario_params("peterson", g_max);
    peterson.omega_m2 = analytics::optimal_ratio(g_max, peterson.kappa,
                                                 peterson.gamma1);
    if (auto pt = solve_resonance(peterson, 20.0)) {
        peterson.delta = -20.0;
        peterson.G1 = peterson.G2 = pt->g2_res;
        run_battery(tally, "peterson", peterson, false);
        tally.note("peterson/locus_residual", pt->residual < 1e-8,
                   fmt(pt->residual));
    } else {
        tally.note("peterson/locus_residual", false, "no root");
    }

    system_params teufel = scenario_params("teufel", g_max);
    teufel.omega_m2 = analytics::optimal_ratio(g_max, teufel.kappa, teufel.gamma1);
    if (auto pt = solve_resonance(teufel, 2.5)) {
        teufel.delta = -2.5;
        teufel.G1 = teufel.G2 = pt->g2_res;
        run_battery(tally, "teufel", teufel, false);
        tally.note("teufel/locus_residual", pt->residual < 1e-8,
                   fmt(pt->residual));
    } else {
        tally.note("teufel/locus_residual", false, "no root");
    }

    // decoupled reference: damped bare oscillators, no couplings
    system_params bare;
    bare.omega_m2 = 1.9;
    bare.delta = -10.0;
    bare.gamma1 = bare.gamma2 = 2e-6;
    run_battery(tally, "decoupled", bare, false);

    snk.out() << (tally.all_ok ? "all checks passed\n" : "checks FAILED\n");
    return tally.all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven three-mode optomechanics: polariton spectra, "
                 "nonlinear cavity response and cooperativity optimization"};
    app.require_subcommand(1);

    command_io io_spectrum, io_dos, io_sweep, io_resonance, io_optimize,
        io_scenario, io_check;
    std::string grid_g2 = "0:0.5:201";
    std::string grid_delta_map = "2:30:201";
    std::string grid_delta_res = "2:60:101";
    std::string grid_delta_opt = "2:60:101";
    std::string grid_delta_scen = "2:60:101";
    double g_max = 0.5;
    std::string ratio_text, gratio_text, scenario_name, inject;

    CLI::App* c_spectrum =
        app.add_subcommand("spectrum", "polariton frequencies and basis");
    add_common(c_spectrum, io_spectrum, "report");

    CLI::App* c_dos =
        app.add_subcommand("dos", "cavity density of states on the adaptive grid");
    add_common(c_dos, io_dos, "csv");

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "nonlinearity map over (G2, |delta|)");
    add_common(c_sweep, io_sweep, "csv");
    c_sweep->add_option("--grid-g2", grid_g2, "G2 range lo:hi:n");
    c_sweep->add_option("--grid-delta", grid_delta_map, "|delta| range lo:hi:n");

    CLI::App* c_resonance =
        app.add_subcommand("resonance", "trace the omega_2 = 2 omega_1 locus");
    add_common(c_resonance, io_resonance, "csv");
    c_resonance->add_option("--grid-delta", grid_delta_res,
                            "|delta| range lo:hi:n");

    CLI::App* c_optimize = app.add_subcommand(
        "optimize", "maximize C_eff,2 on the locus under max(G1,G2) <= gmax");
    add_common(c_optimize, io_optimize, "report");
    c_optimize->add_option("--gmax", g_max, "dressed-coupling bound");
    c_optimize->add_option("--ratio", ratio_text, "omega_m2/omega_m1 grid lo:hi:n");
    c_optimize->add_option("--gratio", gratio_text, "g1/g2 grid lo:hi:n");
    c_optimize->add_option("--grid-delta", grid_delta_opt,
                           "|delta| range for --format csv trace");

    CLI::App* c_scenario =
        app.add_subcommand("scenario", "published device parameter sets");
    c_scenario->add_option("name", scenario_name, "peterson or teufel")
        ->required();
    add_common(c_scenario, io_scenario, "report");
    c_scenario->add_option("--grid-delta", grid_delta_scen,
                           "|delta| range for --format csv trace");

    CLI::App* c_check =
        app.add_subcommand("check", "invariant battery on built-in parameters");
    add_common(c_check, io_check, "report");
    c_check->add_option("--inject-defect", inject,
                        "test hook: corrupt an internal quantity")
        ->check(CLI::IsMember({"symplectic"}));

    try {
        app.parse(argc, argv);

        if (*c_spectrum)
            return cmd_spectrum(
                load_config(io_spectrum.config_path, io_spectrum.sets),
                io_spectrum);
        if (*c_dos)
            return cmd_dos(load_config(io_dos.config_path, io_dos.sets), io_dos);
        if (*c_sweep)
            return cmd_sweep(load_config(io_sweep.config_path, io_sweep.sets),
                             io_sweep, parse_range(grid_g2),
                             parse_range(grid_delta_map));
        if (*c_resonance)
            return cmd_resonance(
                load_config(io_resonance.config_path, io_resonance.sets),
                io_resonance, parse_range(grid_delta_res));
        if (*c_optimize) {
            std::optional<range_spec> rr, gr;
            if (!ratio_text.empty()) rr = parse_range(ratio_text);
            if (!gratio_text.empty()) gr = parse_range(gratio_text);
            return cmd_optimize(
                load_config(io_optimize.config_path, io_optimize.sets),
                io_optimize, g_max, rr, gr, parse_range(grid_delta_opt));
        }
        if (*c_scenario)
            return cmd_scenario(
                load_config(io_scenario.config_path, io_scenario.sets),
                io_scenario, scenario_name, parse_range(grid_delta_scen));
        if (*c_check) return cmd_check(io_check, inject);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const unstable_spectrum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
