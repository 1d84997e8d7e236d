#include "trimode/response.hpp"

#include <algorithm>
#include <cmath>

namespace trimode {

double bose_occupation(double omega, double temperature) {
    if (temperature <= 0.0)
        return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

vec3 polariton_dampings(const polariton_basis& b, const validated_params& p) {
    vec3 k;
    const vec3 gamma = {p.gamma1, p.gamma2, 0.0};
    for (int i = 0; i < 3; ++i) {
        k[i] = p.kappa * (b.v[2][i] * b.v[2][i] - b.v[2][i + 3] * b.v[2][i + 3]);
        for (int j = 0; j < 2; ++j) {
            const double s = b.v[j][i] + b.v[j][i + 3];
            k[i] += gamma[j] * s * s;
        }
    }
    return k;
}

vec3 polariton_occupations(const polariton_basis& b, const vec3& kappa_i,
                           const validated_params& p) {
    vec3 n;
    const vec3 gamma = {p.gamma1, p.gamma2, 0.0};
    for (int i = 0; i < 3; ++i) {
        // Cavity bath at T = 0 contributes only quantum heating (V- weight).
        double val = p.kappa * b.v[2][i + 3] * b.v[2][i + 3];
        const double nb = bose_occupation(b.omega[i], p.temperature);
        for (int j = 0; j < 2; ++j) {
            const double s = b.v[j][i] + b.v[j][i + 3];
            val += gamma[j] * s * s * nb;
        }
        // An isolated undamped mode has no steady state; report an empty one.
        n[i] = kappa_i[i] > 0.0 ? val / kappa_i[i] : 0.0;
    }
    return n;
}

double g211(const polariton_basis& b, const validated_params& p) {
    const auto& v = b.v;
    const double photon_pair = v[2][0] * v[2][1] + v[2][3] * v[2][4];
    const double heating_pair = v[2][0] * v[2][3];
    double total = 0.0;
    const vec3 g = {p.g1, p.g2, 0.0};
    for (int i = 0; i < 2; ++i)
        total += g[i] * (photon_pair * (v[i][0] + v[i][3]) +
                         heating_pair * (v[i][1] + v[i][4]));
    return total;
}

std::complex<double> self_energies::sigma1(double w) const {
    if (g211 == 0.0) return 0.0;
    const double num = 4.0 * g211 * g211 * (n_i[0] - n_i[1]);
    return num / std::complex<double>(w + omega[0] - omega[1],
                                      0.5 * (kappa_i[0] + kappa_i[1]));
}

std::complex<double> self_energies::sigma2(double w) const {
    if (g211 == 0.0) return 0.0;
    const double num = 4.0 * g211 * g211 * (n_i[0] + 0.5);
    return num / std::complex<double>(w - 2.0 * omega[0], kappa_i[0]);
}

double cavity_dos(double w, const polariton_basis& b, const self_energies& se,
                  bool include_nl) {
    std::complex<double> total = 0.0;
    for (int i = 0; i < 3; ++i) {
        std::complex<double> sig_p = 0.0, sig_m = 0.0;
        if (include_nl && i == 0) {
            sig_p = se.sigma1(w);
            sig_m = se.sigma1(-w);
        } else if (include_nl && i == 1) {
            sig_p = se.sigma2(w);
            sig_m = se.sigma2(-w);
        }
        const std::complex<double> gr =
            1.0 / (std::complex<double>(w - b.omega[i], 0.5 * se.kappa_i[i]) - sig_p);
        const std::complex<double> gr_conj = std::conj(
            1.0 / (std::complex<double>(-w - b.omega[i], 0.5 * se.kappa_i[i]) - sig_m));
        total += b.v[2][i] * b.v[2][i] * gr +
                 b.v[2][i + 3] * b.v[2][i + 3] * gr_conj;
    }
    return -total.imag() / M_PI;
}

namespace {

void append_window(std::vector<double>& pts, double center, double half,
                   double step) {
    const int n = static_cast<int>(std::ceil(half / step));
    for (int k = -n; k <= n; ++k)
        pts.push_back(center + k * step);
}

void append_fade(std::vector<double>& pts, double edge, double step,
                 double coarse, int direction) {
    // Geometric step growth bridging a fine window edge to the coarse grid.
    double x = edge, h = step;
    while (h < coarse) {
        h *= 1.2;
        x += direction * h;
        pts.push_back(x);
    }
}

} // namespace

frequency_grid make_adaptive_grid(const polariton_basis& b, const vec3& kappa_i,
                                  double split_hint) {
    const double fine12 = std::min(kappa_i[0], kappa_i[1]);
    struct win {
        double center, width;
    };
    std::vector<win> wins = {{b.omega[0], fine12},
                             {b.omega[1], fine12},
                             {2.0 * b.omega[0], fine12},
                             {b.omega[1] - b.omega[0], fine12},
                             {b.omega[2], kappa_i[2]}};

    frequency_grid grid;
    const double coarse = 0.25 * kappa_i[2];
    for (const auto& w : wins) {
        // Zero-width windows arise only for modes with no cavity admixture;
        // they carry no spectral weight, so the coarse grid suffices.
        if (w.center <= 0.0 || w.width <= 0.0)
            continue;
        const double half = std::max(20.0 * w.width, 2.0 * std::abs(split_hint));
        const double step = w.width / 20.0;
        append_window(grid.scan_points, w.center, half, step);
        append_fade(grid.scan_points, w.center + half, step, coarse, +1);
        append_fade(grid.scan_points, w.center - half, step, coarse, -1);
    }

    // omega_2 and 2 omega_1 windows swallowed by the omega_3 window: the
    // diagonal-Green's-function treatment is questionable there.
    const double half3 = 20.0 * kappa_i[2];
    if (std::abs(b.omega[1] - b.omega[2]) < half3 &&
        std::abs(2.0 * b.omega[0] - b.omega[2]) < half3)
        grid.overlap_warning = true;

    // Full grid: symmetric windows plus a coarse background out to the tails.
    // The tail margin keeps the truncated Lorentzian mass well below the
    // 1e-3 sum-rule budget.
    const double tail = b.omega[2] + std::max(2000.0 * kappa_i[2], 40.0);
    std::vector<double> pts = grid.scan_points;
    for (double x : grid.scan_points)
        pts.push_back(-x);
    for (double x = -tail; x <= tail; x += coarse)
        pts.push_back(x);
    pts.push_back(tail);

    std::sort(pts.begin(), pts.end());
    grid.points.reserve(pts.size());
    for (double x : pts) {
        if (grid.points.empty() ||
            x - grid.points.back() > 1e-9 * (std::abs(x) + 1.0))
            grid.points.push_back(x);
    }

    std::sort(grid.scan_points.begin(), grid.scan_points.end());
    grid.scan_points.erase(
        std::unique(grid.scan_points.begin(), grid.scan_points.end()),
        grid.scan_points.end());
    return grid;
}

double metric_I(const polariton_basis& b, const self_energies& se,
                const frequency_grid& grid) {
    double best = 0.0;
    for (double w : grid.scan_points)
        best = std::max(best, std::abs(cavity_dos(w, b, se, true) -
                                       cavity_dos(w, b, se, false)));
    return best;
}

nonlinear_response cooperativities(double g211_value, const vec3& kappa_i,
                                   const vec3& n_i) {
    nonlinear_response nl;
    nl.g211 = g211_value;
    const double g2 = g211_value * g211_value;
    nl.c_eff1 = 16.0 * g2 * (n_i[0] - n_i[1]) / (kappa_i[0] * (kappa_i[0] + kappa_i[1]));
    nl.c_eff2 = 4.0 * g2 * (1.0 + 2.0 * n_i[0]) / (kappa_i[0] * kappa_i[1]);
    nl.negative_cooperativity = n_i[0] < n_i[1];
    return nl;
}

void peak_splittings(nonlinear_response& nl, const vec3& kappa_i, const vec3& n_i) {
    if (n_i[0] < n_i[1])
        throw negative_population_inversion(
            "peak splitting delta_1 undefined: n1 < n2");
    const double g = std::abs(nl.g211);
    nl.delta1 = 4.0 * g * std::sqrt(n_i[0] - n_i[1]);
    nl.delta2 = 4.0 * g * std::sqrt(n_i[0] + 0.5);
    nl.resolved1 = nl.delta1 >= kappa_i[0];
    nl.resolved2 = nl.delta2 >= kappa_i[1];
}

std::vector<double> find_peaks(const polariton_basis& b, const self_energies& se,
                               double lo, double hi, double step) {
    std::vector<double> peaks;
    const int n = static_cast<int>(std::floor((hi - lo) / step));
    if (n < 3)
        return peaks;
    double ym = cavity_dos(lo, b, se, true);
    double y0 = cavity_dos(lo + step, b, se, true);
    for (int i = 2; i <= n; ++i) {
        const double yp = cavity_dos(lo + i * step, b, se, true);
        if (y0 >= ym && y0 > yp) {
            // Quadratic interpolation through the three samples.
            const double denom = ym - 2.0 * y0 + yp;
            const double off = denom != 0.0 ? 0.5 * (ym - yp) / denom : 0.0;
            peaks.push_back(lo + (i - 1 + off) * step);
        }
        ym = y0;
        y0 = yp;
    }
    return peaks;
}

response_state evaluate_response(const validated_params& p) {
    response_state st;
    st.basis = diagonalize(build_M(p), p);
    st.lin.kappa_i = polariton_dampings(st.basis, p);
    st.lin.n_i = polariton_occupations(st.basis, st.lin.kappa_i, p);
    const double g = g211(st.basis, p);
    st.nl = cooperativities(g, st.lin.kappa_i, st.lin.n_i);
    if (st.lin.n_i[0] >= st.lin.n_i[1])
        peak_splittings(st.nl, st.lin.kappa_i, st.lin.n_i);
    st.se = self_energies{g, st.basis.omega, st.lin.kappa_i, st.lin.n_i};
    return st;
}

} // namespace trimode
