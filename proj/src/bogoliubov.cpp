#include "trimode/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trimode {

coupling_matrix build_M(const validated_params& p) {
    coupling_matrix cm;
    auto& m = cm.m;
    m[0][0] = p.omega_m1 * p.omega_m1;
    m[1][1] = p.omega_m2 * p.omega_m2;
    m[2][2] = p.delta * p.delta;
    m[0][1] = m[1][0] = 0.0;
    m[0][2] = m[2][0] = 2.0 * p.G1 * std::sqrt(p.abs_delta * p.omega_m1);
    m[1][2] = m[2][1] = 2.0 * p.G2 * std::sqrt(p.abs_delta * p.omega_m2);
    return cm;
}

void jacobi_eigen3(const mat3& m, vec3& d, mat3& u, double tol) {
    mat3 a = m;
    u = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    double norm2 = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            norm2 += a[i][j] * a[i][j];
    const double thresh2 = tol * tol * norm2;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off2 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        if (2.0 * off2 <= thresh2)
            break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0)
                    continue;
                // Classic Jacobi rotation zeroing a[p][q].
                const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                const int r = 3 - p - q;  // remaining index
                const double arp = a[r][p], arq = a[r][q];
                a[r][p] = a[p][r] = c * arp - s * arq;
                a[r][q] = a[q][r] = s * arp + c * arq;
                for (int i = 0; i < 3; ++i) {
                    const double uip = u[i][p], uiq = u[i][q];
                    u[i][p] = c * uip - s * uiq;
                    u[i][q] = s * uip + c * uiq;
                }
            }
        }
    }
    for (int i = 0; i < 3; ++i)
        d[i] = a[i][i];
}

namespace {

// Sorts eigenpairs ascending and fixes each column sign so that its
// largest-magnitude entry is positive.
void sort_and_fix_signs(vec3& d, mat3& u) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    vec3 ds;
    mat3 us;
    for (int k = 0; k < 3; ++k) {
        ds[k] = d[idx[k]];
        int imax = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(u[i][idx[k]]) > std::abs(u[imax][idx[k]]))
                imax = i;
        const double sign = u[imax][idx[k]] < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < 3; ++i)
            us[i][k] = sign * u[i][idx[k]];
    }
    d = ds;
    u = us;
}

double f_plus(double x) { return 0.5 * (std::sqrt(x) + 1.0 / std::sqrt(x)); }
double f_minus(double x) { return 0.5 * (std::sqrt(x) - 1.0 / std::sqrt(x)); }

} // namespace

polariton_basis diagonalize(const coupling_matrix& m, const validated_params& p) {
    vec3 lambda;
    mat3 u;
    jacobi_eigen3(m.m, lambda, u);
    sort_and_fix_signs(lambda, u);

    const double ds = p.delta * p.delta;
    if (lambda[0] < -1e-12 * ds) {
        std::ostringstream msg;
        msg << "negative squared polariton frequency " << lambda[0]
            << " (linear instability)";
        throw unstable_spectrum(msg.str());
    }

    polariton_basis basis;
    basis.u = u;
    for (int i = 0; i < 3; ++i)
        basis.omega[i] = std::sqrt(std::max(lambda[i], 0.0));

    for (int i = 0; i < 2; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(lambda[j] - lambda[i]) <=
                1e-10 * std::max(std::abs(lambda[i]), std::abs(lambda[j])))
                basis.degenerate = true;

    // V rows follow (b1, b2, d); x = bare frequency / polariton frequency.
    const vec3 bare = {p.omega_m1, p.omega_m2, p.abs_delta};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            const double x = bare[j] / basis.omega[i];
            basis.v[j][i] = u[j][i] * f_plus(x);
            basis.v[j][i + 3] = u[j][i] * f_minus(x);
        }
    }
    return basis;
}

namespace {

struct b_squared {
    double b11, b22, b12;  // B_ij^2 of the large-detuning expansion
};

b_squared b_matrix(const validated_params& p) {
    const double pref = 4.0 / p.abs_delta;
    return {pref * p.G1 * p.G1 * p.omega_m1, pref * p.G2 * p.G2 * p.omega_m2,
            pref * p.G1 * p.G2 * std::sqrt(p.omega_m1 * p.omega_m2)};
}

} // namespace

vec3 perturbative_frequencies(const validated_params& p) {
    const auto b = b_matrix(p);
    const double wm1s = p.omega_m1 * p.omega_m1;
    const double wm2s = p.omega_m2 * p.omega_m2;
    const double s = wm1s - wm2s - b.b11 + b.b22;
    const double root = std::sqrt(s * s + 4.0 * b.b12 * b.b12);
    const double sum = wm1s + wm2s - b.b11 - b.b22;
    const double w1s = 0.5 * (sum - root);
    const double w2s = 0.5 * (sum + root);
    if (w1s < 0.0) {
        std::ostringstream msg;
        msg << "perturbative omega_1^2 = " << w1s << " < 0";
        throw negative_squared_frequency(msg.str());
    }
    return {std::sqrt(w1s), std::sqrt(w2s),
            std::sqrt(p.delta * p.delta + b.b11 + b.b22)};
}

mat3 perturbative_U(const validated_params& p) {
    const auto b = b_matrix(p);
    const double num = 2.0 * b.b12;
    const double den = p.omega_m2 * p.omega_m2 - p.omega_m1 * p.omega_m1 +
                       b.b11 - b.b22;
    const double scale = std::max({std::abs(b.b11), std::abs(b.b22),
                                   p.omega_m2 * p.omega_m2});
    if (std::abs(num) < 1e-15 * scale && std::abs(den) < 1e-15 * scale)
        throw degenerate_rotation(
            "mechanical rotation angle undefined: tan(2 theta) = 0/0");
    const double theta = 0.5 * std::atan2(num, den);
    const double ct = std::cos(theta), st = std::sin(theta);
    const double e1 = std::sqrt(b.b11) / p.abs_delta;  // B11/|delta|
    const double e2 = std::sqrt(b.b22) / p.abs_delta;  // B22/|delta|

    mat3 u;
    u[0] = {ct, -st, e1};
    u[1] = {st, ct, e2};
    u[2] = {-(e1 * ct + e2 * st), e1 * st - e2 * ct, 1.0};
    return u;
}

dark_bright dark_bright_reduce(const validated_params& p) {
    if (p.omega_m1 != p.omega_m2)
        throw not_degenerate("dark/bright reduction requires omega_m1 == omega_m2");
    dark_bright db;
    db.G_tilde = std::hypot(p.G1, p.G2);
    const auto n = photon_number(p);
    db.g_tilde = n && *n > 0.0 ? db.G_tilde / std::sqrt(*n) : 0.0;
    if (db.G_tilde > 0.0)
        db.dark = {-p.G2 / db.G_tilde, p.G1 / db.G_tilde, 0.0};
    return db;
}

} // namespace trimode
