#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace trimode {

// Bisection on a bracket [lo, hi] with f(lo) = flo and sign(f(hi)) != sign(flo).
// Stops when the bracket shrinks below xtol_rel * (|lo| + |hi| + 1).
template <class F>
double bisect(F&& f, double lo, double hi, double flo, double xtol_rel = 1e-12,
              int max_iter = 200) {
    for (int i = 0; i < max_iter; ++i) {
        if (hi - lo <= xtol_rel * (std::abs(lo) + std::abs(hi) + 1.0)) break;
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section maximization of a unimodal f on [lo, hi].
// Returns (argmax, max). Deterministic: fixed reduction sequence.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi,
                                     double xtol_rel = 1e-6, int max_iter = 200) {
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter; ++i) {
        if (b - a <= xtol_rel * (std::abs(a) + std::abs(b) + 1.0)) break;
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 >= f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Least-squares straight line y = intercept + slope * x.
struct line_fit {
    double intercept = 0.0;
    double slope = 0.0;
};

inline line_fit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    line_fit fit;
    const double den = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

} // namespace trimode
