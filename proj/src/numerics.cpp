#include "gasfold/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace gasfold::numerics {

double bracketed_root(const std::function<double(double)>& f,
                      const std::function<double(double)>& df,
                      double a, double b, double abs_f, double abs_x, int max_iter) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw std::invalid_argument("bracketed_root: endpoints do not bracket a root");
    double x = 0.5 * (a + b);
    for (int it = 0; it < max_iter; ++it) {
        double fx = f(x);
        if (std::abs(fx) < abs_f) return x;
        if (std::signbit(fx) == std::signbit(fa)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        if (b - a < abs_x) return 0.5 * (a + b);
        double xn = x;
        bool newton_ok = false;
        if (df) {
            double d = df(x);
            if (d != 0.0 && std::isfinite(d)) {
                xn = x - fx / d;
                newton_ok = xn > a && xn < b;
            }
        }
        x = newton_ok ? xn : 0.5 * (a + b);
    }
    return x;
}

double bisect(const std::function<double(double)>& f, double a, double b,
              double abs_x, int max_iter) {
    double fa = f(a);
    if (fa == 0.0) return a;
    double fb = f(b);
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw std::invalid_argument("bisect: endpoints do not bracket a root");
    for (int it = 0; it < max_iter && (b - a) > abs_x; ++it) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if (std::signbit(fm) == std::signbit(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double golden_min(const std::function<double(double)>& f, double a, double b, double abs_x) {
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > abs_x) {
        if (f1 < f2) {
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
    return 0.5 * (a + b);
}

bool solve2x2(const std::array<std::array<double, 2>, 2>& J,
              const std::array<double, 2>& r, std::array<double, 2>& dx) {
    double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0 || !std::isfinite(det)) return false;
    dx[0] = (-r[0] * J[1][1] + r[1] * J[0][1]) / det;
    dx[1] = (-J[0][0] * r[1] + J[1][0] * r[0]) / det;
    return true;
}

std::array<double, 2> r2_point(std::uint64_t k) {
    // Additive recurrence driven by the plastic number.
    const double g = 1.32471795724474602596;
    const double a1 = 1.0 / g;
    const double a2 = 1.0 / (g * g);
    double x = std::fmod(0.5 + a1 * static_cast<double>(k + 1), 1.0);
    double y = std::fmod(0.5 + a2 * static_cast<double>(k + 1), 1.0);
    return {x, y};
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace gasfold::numerics
