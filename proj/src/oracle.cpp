#include "gasfold/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "gasfold/errors.hpp"
#include "gasfold/numerics.hpp"

namespace gasfold::oracle {

namespace {

double central(const std::function<double(const std::vector<double>&)>& f,
               std::vector<double>& point, std::size_t index, double h) {
    double x = point[index];
    point[index] = x + h;
    double fp = f(point);
    point[index] = x - h;
    double fm = f(point);
    point[index] = x;
    if (!std::isfinite(fp) || !std::isfinite(fm))
        throw OracleError("fd_partial: non-finite evaluation");
    return (fp - fm) / (2.0 * h);
}

// G7/K15 nodes and weights on [-1, 1].
constexpr double kx[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                          0.741531185599394, 0.586087235467691, 0.405845151377397,
                          0.207784955007898, 0.0};
constexpr double kw[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                          0.140653259715525, 0.169004726639267, 0.190350578064785,
                          0.204432940075298, 0.209482141084728};
constexpr double gw[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                          0.417959183673469};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fp = f(c + h * kx[i]);
        double fm = (i == 7) ? fp : f(c - h * kx[i]);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw OracleError("nquad: non-finite integrand");
        double s = (i == 7) ? fp : fp + fm;
        k += kw[i] * s;
        if (i % 2 == 1) g += gw[i / 2] * s;
    }
    return {a, b, k * h, std::abs((k - g) * h)};
}

} // namespace

double fd_partial(const std::function<double(const std::vector<double>&)>& f,
                  std::vector<double> point, std::size_t index, FDConfig cfg) {
    if (index >= point.size()) throw OracleError("fd_partial: index out of range");
    double h = cfg.h * std::max(1.0, std::abs(point[index]));
    double d1 = central(f, point, index, h);
    if (!cfg.richardson) return d1;
    double d2 = central(f, point, index, 0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

double fd_derivative(const std::function<double(double)>& f, double x, FDConfig cfg) {
    return fd_partial([&f](const std::vector<double>& p) { return f(p[0]); }, {x}, 0, cfg);
}

double fd_partial2(const std::function<double(double, double)>& f, double u, double rho,
                   std::size_t index, FDConfig cfg) {
    return fd_partial([&f](const std::vector<double>& p) { return f(p[0], p[1]); }, {u, rho},
                      index, cfg);
}

double nquad(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::deque<Panel> panels{gk15(f, a, b)};
    double total_err = panels.front().error;
    const int max_panels = 4000;
    while (total_err > tol) {
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& p, const Panel& q) { return p.error < q.error; });
        if (static_cast<int>(panels.size()) >= max_panels || worst->b - worst->a < 1e-15 * (b - a))
            throw OracleError("nquad: subdivision limit reached");
        Panel bad = *worst;
        panels.erase(worst);
        double mid = 0.5 * (bad.a + bad.b);
        panels.push_back(gk15(f, bad.a, mid));
        panels.push_back(gk15(f, mid, bad.b));
        total_err = 0.0;
        for (const auto& p : panels) total_err += p.error;
    }
    double sum = 0.0;
    for (const auto& p : panels) sum += p.value;
    return sign * sum;
}

std::vector<std::pair<double, double>> fold_scan(const family::SolutionFamily& fam,
                                                 const std::vector<double>& u_grid,
                                                 const std::vector<double>& rho_grid) {
    std::vector<std::pair<double, double>> hits;
    for (double rho : rho_grid) {
        auto g = [&fam, rho](double u) { return family::fold_indicator(fam, u, rho); };
        double prev_u = 0.0, prev_g = 0.0;
        bool have_prev = false;
        for (double u : u_grid) {
            double gu = g(u);
            if (gu == 0.0) {
                hits.emplace_back(u, rho);
            } else if (have_prev && prev_g != 0.0 &&
                       std::signbit(gu) != std::signbit(prev_g)) {
                double u_star = numerics::bisect(g, std::min(prev_u, u), std::max(prev_u, u), 1e-8);
                hits.emplace_back(u_star, rho);
            }
            prev_u = u;
            prev_g = gu;
            have_prev = true;
        }
    }
    return hits;
}

double mass_integral(const std::vector<family::ProfileSample>& profile,
                     std::pair<double, double> x_window) {
    const double lo = std::min(x_window.first, x_window.second);
    const double hi = std::max(x_window.first, x_window.second);
    int dir = 0;
    double sum = 0.0;
    for (std::size_t i = 1; i < profile.size(); ++i) {
        double xa = profile[i - 1].x;
        double xb = profile[i].x;
        double ra = profile[i - 1].rho;
        double rb = profile[i].rho;
        double dx = xb - xa;
        if (std::abs(dx) <= 1e-12) continue; // a declared jump carries no width
        int d = dx > 0.0 ? 1 : -1;
        if (dir != 0 && d != dir)
            throw OracleError("mass_integral: multivalued input without a declared jump near x=" +
                              std::to_string(xa));
        dir = d;
        double xl = std::min(xa, xb);
        double xr = std::max(xa, xb);
        double cl = std::max(xl, lo);
        double cr = std::min(xr, hi);
        if (cl >= cr) continue;
        auto rho_at = [&](double x) { return ra + (rb - ra) * (x - xa) / dx; };
        sum += 0.5 * (rho_at(cl) + rho_at(cr)) * (cr - cl);
    }
    return sum;
}

} // namespace gasfold::oracle
