#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cavpol/errors.hpp"

namespace cavpol::num {

/// Locate the maximum of f on [a, b] by repeated scan-and-zoom. Each round
/// samples `points` positions, then shrinks the bracket to one step either
/// side of the best sample. Robust for narrow peaks; no derivative needed.
template <typename F>
double scan_maximize(F&& f, double a, double b, double xtol, int points = 256) {
    double lo = a, hi = b;
    while (hi - lo > xtol) {
        double best_x = lo, best_v = -INFINITY;
        double step = (hi - lo) / (points - 1);
        for (int i = 0; i < points; ++i) {
            double x = lo + i * step;
            double v = f(x);
            if (v > best_v) {
                best_v = v;
                best_x = x;
            }
        }
        lo = std::max(a, best_x - step);
        hi = std::min(b, best_x + step);
    }
    return 0.5 * (lo + hi);
}

/// Bisection for f(x) = 0 on a bracketing interval (f(a) and f(b) of
/// opposite sign). Returns the midpoint once the interval is below xtol.
template <typename F>
double bisect(F&& f, double a, double b, double xtol) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw numerical_error("bisect: endpoints do not bracket a root");
    while (b - a > xtol) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

namespace detail {
template <typename F>
double simpson_rec(F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
template <typename F>
double integrate(F&& f, double a, double b, double tol, int max_depth = 40) {
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw invalid_input("fit_slope: need two equal-length samples at least");
    double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// FNV-1a 64-bit hash, used for reproducibility stamps in output metadata.
inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace cavpol::num
