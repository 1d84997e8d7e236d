#include "trimode/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "trimode/analytics.hpp"
#include "trimode/bogoliubov.hpp"
#include "trimode/errors.hpp"
#include "trimode/numerics.hpp"

namespace trimode {

namespace {

double coupling_gratio(const system_params& p) {
    if (p.g2 > 0.0) return p.g1 / p.g2;
    if (p.G2 > 0.0) return p.G1 / p.G2;
    return 1.0;
}

// Locus condition f(G2) = omega_2 - 2 omega_1 at fixed |delta|, with
// G1 = (g1/g2) G2 so both tones share the same photon number.
struct locus_problem {
    system_params base;
    double abs_delta = 0.0;
    double gratio = 1.0;

    system_params at(double g2) const {
        system_params p = base;
        p.delta = -abs_delta;
        p.G2 = g2;
        p.G1 = gratio * g2;
        return p;
    }

    double mismatch(double g2, vec3* w = nullptr) const {
        const validated_params vp = validate(at(g2));
        const polariton_basis b = diagonalize(build_M(vp), vp);
        if (w) *w = b.omega;
        return b.omega[1] - 2.0 * b.omega[0];
    }

    // G2 on the stability boundary for this gratio and detuning.
    double stability_cap() const {
        const double wm1 = base.omega_m1, wm2 = base.omega_m2;
        return std::sqrt(abs_delta * wm1 * wm2 /
                         (4.0 * (gratio * gratio * wm2 + wm1)));
    }
};

response_state locus_response(const locus_problem& prob, const resonance_point& pt) {
    return evaluate_response(validate(prob.at(pt.g2_res)));
}

} // namespace

std::vector<double> range_spec::grid() const {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * double(i) / double(n - 1));
    return out;
}

std::vector<double> range_spec::log_grid() const {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::exp(llo + (lhi - llo) * double(i) / double(n - 1)));
    return out;
}

std::optional<resonance_point> solve_resonance(const system_params& base,
                                               double abs_delta) {
    locus_problem prob{base, abs_delta, coupling_gratio(base)};
    const double wm1 = base.omega_m1;

    // omega_m2 = 2 omega_m1 exactly: the bare spectrum is already resonant,
    // the locus starts at zero coupling.
    if (std::abs(base.omega_m2 - 2.0 * wm1) < 1e-12 * wm1) {
        vec3 w{};
        const double res = prob.mismatch(0.0, &w);
        return resonance_point{abs_delta, 0.0, w, std::abs(res)};
    }

    const double cap = prob.stability_cap() * (1.0 - 1e-12);
    double lo = cap * 1e-12;
    double hi = cap;
    double flo = prob.mismatch(lo);
    double fhi = prob.mismatch(hi);

    if ((flo < 0.0) == (fhi < 0.0)) {
        // Same sign at both ends (omega_m2 > 2 omega_m1 territory):
        // scan for an interior sign change before giving up.
        constexpr int segments = 48;
        bool bracketed = false;
        double xp = lo, fp = flo;
        for (int k = 1; k <= segments; ++k) {
            const double x = lo + (cap - lo) * double(k) / segments;
            const double fx = prob.mismatch(x);
            if ((fp < 0.0) != (fx < 0.0)) {
                lo = xp;
                hi = x;
                flo = fp;
                bracketed = true;
                break;
            }
            xp = x;
            fp = fx;
        }
        if (!bracketed) return std::nullopt;
    }

    const double root =
        bisect([&](double x) { return prob.mismatch(x); }, lo, hi, flo);
    vec3 w{};
    const double res = std::abs(prob.mismatch(root, &w));
    return resonance_point{abs_delta, root, w, res};
}

resonance_trace trace_resonance(const system_params& base, const range_spec& deltas) {
    resonance_trace trace;
    for (double d : deltas.grid()) {
        if (auto pt = solve_resonance(base, d))
            trace.points.push_back(*pt);
        else
            trace.no_root.push_back(d);
    }
    return trace;
}

std::vector<locus_sample> cooperativity_trace(const system_params& base,
                                              const resonance_trace& locus,
                                              double g_max) {
    std::vector<locus_sample> out;
    out.reserve(locus.points.size());
    const locus_problem prob{base, 0.0, coupling_gratio(base)};
    std::optional<std::size_t> best;
    for (const resonance_point& pt : locus.points) {
        locus_problem at_pt = prob;
        at_pt.abs_delta = pt.abs_delta;
        const response_state st = locus_response(at_pt, pt);
        locus_sample s;
        s.pt = pt;
        s.lin = st.lin;
        s.g211 = st.nl.g211;
        s.c_eff1 = st.nl.c_eff1;
        s.c_eff2 = st.nl.c_eff2;
        s.feasible =
            std::max(1.0, at_pt.gratio) * pt.g2_res <= g_max * (1.0 + 1e-12);
        if (s.feasible && (!best || s.c_eff2 > out[*best].c_eff2))
            best = out.size();
        out.push_back(s);
    }
    if (best) out[*best].starred = true;
    return out;
}

std::vector<map_cell> map_metric(const system_params& base, const range_spec& g2s,
                                 const range_spec& deltas) {
    std::vector<map_cell> out;
    const std::vector<double> gg = g2s.grid();
    const std::vector<double> dd = deltas.grid();
    out.reserve(gg.size() * dd.size());
    const double rg = coupling_gratio(base);
    for (double g2 : gg) {
        for (double d : dd) {
            map_cell cell;
            cell.g2 = g2;
            cell.abs_delta = d;
            system_params p = base;
            p.delta = -d;
            p.G2 = g2;
            p.G1 = rg * g2;
            const validated_params vp = validate(p);
            if (!is_stable(vp)) {
                out.push_back(cell);
                continue;
            }
            const response_state st = evaluate_response(vp);
            cell.stable = true;
            cell.omega = st.basis.omega;
            const frequency_grid grid =
                make_adaptive_grid(st.basis, st.lin.kappa_i, st.nl.delta2);
            cell.log10_metric = std::log10(metric_I(st.basis, st.se, grid));
            out.push_back(cell);
        }
    }
    return out;
}

namespace {

struct cell_best {
    bool feasible = false;
    double c = 0.0;
    double delta = 0.0;
    double g2 = 0.0;
};

// Best C_eff,2 over the feasible locus segment of one (ratio, gratio) cell.
// The larger single-photon coupling stays at g_base while g1/g2 = gratio.
cell_best optimize_cell(const system_params& base0, double g_base, double ratio,
                        double gratio, double g_max) {
    system_params base = base0;
    base.omega_m2 = ratio * base.omega_m1;
    base.g1 = g_base * std::min(1.0, gratio);
    base.g2 = g_base * std::min(1.0, 1.0 / gratio);
    base.G1 = base.g1;
    base.G2 = base.g2;

    cell_best best;
    const double cap2 = g_max / std::max(1.0, gratio);

    // Scan range: geometric grid up to past the point where the coupling
    // cap binds (crude large-|delta| estimate), clamped to [10, 1000].
    const double wm1 = base.omega_m1;
    double delta_cap = 1000.0;
    if (base.omega_m2 < 2.0 * wm1)
        delta_cap = analytics::resonant_delta(wm1, base.omega_m2, cap2);
    const double delta_lo = 2.0 * wm1;
    const double delta_hi =
        std::clamp(2.5 * delta_cap, 10.0 * wm1, 1000.0 * wm1);

    constexpr std::size_t coarse_n = 21;
    const std::vector<double> xs =
        range_spec{delta_lo, delta_hi, coarse_n}.log_grid();

    struct sample {
        double delta = 0.0;
        double g2 = -1.0;  // negative: no root
        double c = 0.0;
        bool feasible = false;
    };
    std::vector<sample> scan;
    scan.reserve(xs.size());

    locus_problem prob{base, 0.0, gratio};
    auto c2_at = [&](const resonance_point& pt) {
        prob.abs_delta = pt.abs_delta;
        return locus_response(prob, pt).nl.c_eff2;
    };

    std::optional<std::size_t> k_best;
    for (double d : xs) {
        sample s;
        s.delta = d;
        if (auto pt = solve_resonance(base, d)) {
            s.g2 = pt->g2_res;
            s.feasible = pt->g2_res <= cap2 * (1.0 + 1e-12);
            if (s.feasible) {
                s.c = c2_at(*pt);
                if (!k_best || s.c > scan[*k_best].c) k_best = scan.size();
            }
        }
        scan.push_back(s);
    }
    if (!k_best) return best;

    const std::size_t k = *k_best;

    // Upper end of the feasible segment: refine the cap crossing when the
    // next coarse sample exists but violates the cap.
    double hi_seg = scan[k].delta;
    if (k + 1 < scan.size() && scan[k + 1].g2 >= 0.0 && !scan[k + 1].feasible) {
        prob.abs_delta = 0.0;
        auto cap_excess = [&](double d) {
            auto pt = solve_resonance(base, d);
            return pt ? pt->g2_res - cap2 : 1.0;
        };
        hi_seg = bisect(cap_excess, scan[k].delta, scan[k + 1].delta,
                        scan[k].g2 - cap2, 1e-10);
    } else if (k + 1 < scan.size() && scan[k + 1].feasible) {
        hi_seg = scan[k + 1].delta;
    }
    const double lo_seg = (k > 0) ? scan[k - 1].delta : scan[k].delta;

    auto objective = [&](double d) {
        auto pt = solve_resonance(base, d);
        if (!pt || pt->g2_res > cap2 * (1.0 + 1e-9)) return -1.0;
        return c2_at(*pt);
    };
    const auto [d_opt, c_opt] = golden_max(objective, lo_seg, hi_seg, 1e-6);

    best.feasible = true;
    if (c_opt >= scan[k].c) {
        best.c = c_opt;
        best.delta = d_opt;
    } else {
        best.c = scan[k].c;
        best.delta = scan[k].delta;
    }
    if (auto pt = solve_resonance(base, best.delta)) best.g2 = pt->g2_res;
    return best;
}

} // namespace

optimum_report optimize(const system_params& base, double g_max,
                        const std::vector<double>& ratios,
                        const std::vector<double>& gratios) {
    const double g_base = std::max(base.g1, base.g2);

    optimum_report rep;
    rep.g_max = g_max;

    bool any = false;
    std::size_t k_ratio = 0;
    double best_c = 0.0, best_delta = 0.0, best_ratio = 0.0, best_gratio = 1.0;
    for (std::size_t j = 0; j < gratios.size(); ++j) {
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            const cell_best cell =
                optimize_cell(base, g_base, ratios[i], gratios[j], g_max);
            if (!cell.feasible) continue;
            const bool better =
                !any || cell.c > best_c ||
                (cell.c == best_c && cell.delta < best_delta);
            if (better) {
                any = true;
                best_c = cell.c;
                best_delta = cell.delta;
                best_ratio = ratios[i];
                best_gratio = gratios[j];
                k_ratio = i;
            }
        }
    }
    if (!any)
        throw empty_feasible_set(
            "no resonance-locus point satisfies max(G1, G2) <= g_max");

    // Continuum refinement along the ratio axis around the winning cell.
    if (ratios.size() > 2 && k_ratio > 0 && k_ratio + 1 < ratios.size()) {
        auto cell_c = [&](double r) {
            const cell_best cell =
                optimize_cell(base, g_base, r, best_gratio, g_max);
            return cell.feasible ? cell.c : -1.0;
        };
        const auto [r_opt, c_opt] =
            golden_max(cell_c, ratios[k_ratio - 1], ratios[k_ratio + 1], 1e-7);
        if (c_opt > best_c) {
            best_ratio = r_opt;
            best_c = c_opt;
        }
    }

    const cell_best cell =
        optimize_cell(base, g_base, best_ratio, best_gratio, g_max);
    rep.c_tilde = cell.c;
    rep.delta_opt = cell.delta;
    rep.g2_opt = cell.g2;
    rep.g_opt = std::max(1.0, best_gratio) * cell.g2;
    rep.ratio_opt = best_ratio;
    rep.gratio_opt = best_gratio;

    system_params popt = base;
    popt.omega_m2 = best_ratio * base.omega_m1;
    popt.g1 = g_base * std::min(1.0, best_gratio);
    popt.g2 = g_base * std::min(1.0, 1.0 / best_gratio);
    popt.delta = -cell.delta;
    popt.G2 = cell.g2;
    popt.G1 = best_gratio * cell.g2;
    const response_state st = evaluate_response(validate(popt));
    rep.g211 = st.nl.g211;
    rep.kappa1 = st.lin.kappa_i[0];
    rep.kappa2 = st.lin.kappa_i[1];
    rep.n1 = st.lin.n_i[0];
    rep.n2 = st.lin.n_i[1];

    rep.enhancement = analytics::enhancement_R(g_max, base.kappa, base.gamma1);
    rep.analytic_c = analytics::ctilde_optimal(rep.enhancement, g_base, base.kappa);
    rep.analytic_ratio = analytics::optimal_ratio(g_max, base.kappa, base.gamma1);
    rep.two_mode_c = analytics::two_mode_ceff(g_base, base.kappa);
    return rep;
}

system_params scenario_params(const std::string& name, double& g_max) {
    double kappa_hz = 0.0, wm_hz = 0.0, gamma_hz = 0.0, g_hz = 0.0, gmax_hz = 0.0;
    if (name == "peterson") {
        kappa_hz = 1.2e6;
        wm_hz = 9.696e6;
        gamma_hz = 31.0;
        g_hz = 167.0;
        gmax_hz = 3.83e6;
    } else if (name == "teufel") {
        kappa_hz = 0.17e6;
        wm_hz = 10.69e6;
        gamma_hz = 30.0;
        g_hz = 230.0;
        gmax_hz = 0.5e6;
    } else {
        throw unknown_scenario("unknown scenario '" + name +
                               "' (expected peterson or teufel)");
    }
    system_params p;
    p.omega_m1 = 1.0;
    p.omega_m2 = 2.0;  // placeholder; the ratio is optimized
    p.kappa = kappa_hz / wm_hz;
    p.gamma1 = p.gamma2 = gamma_hz / wm_hz;
    p.g1 = p.g2 = g_hz / wm_hz;
    p.G1 = p.g1;
    p.G2 = p.g2;
    g_max = gmax_hz / wm_hz;
    return p;
}

optimum_report run_scenario(const std::string& name) {
    double g_max = 0.0;
    const system_params p = scenario_params(name, g_max);

    // Ratio grid centered on the predicted deviation from 2, covering a
    // factor 8 either way; geometric in the deviation.
    const double dev =
        analytics::coeff_c0() * std::cbrt(p.gamma1 / p.kappa) *
        std::pow(g_max / p.omega_m1, 4.0 / 3.0);
    const std::vector<double> devs =
        range_spec{dev / 8.0, 8.0 * dev, 41}.log_grid();
    std::vector<double> ratios;
    ratios.reserve(devs.size());
    for (std::size_t i = devs.size(); i-- > 0;)
        ratios.push_back(2.0 - devs[i]);

    return optimize(p, g_max, ratios, std::vector<double>{1.0});
}

} // namespace trimode
