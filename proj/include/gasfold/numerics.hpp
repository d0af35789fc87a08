#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace gasfold {

/// Closed positive interval used as the declared rho domain of a model.
struct Interval {
    double lo = 1e-10;
    double hi = 1e10;
    bool contains(double x) const { return x >= lo && x <= hi; }
};

namespace numerics {

/// Root of f on [a, b] (f(a), f(b) of opposite sign) by Newton steps
/// safeguarded with bisection. df may be empty; then pure bisection is used.
/// Tolerance is on |f| (abs_f) and on the bracket width (abs_x).
double bracketed_root(const std::function<double(double)>& f,
                      const std::function<double(double)>& df,
                      double a, double b, double abs_f = 1e-13, double abs_x = 1e-15,
                      int max_iter = 200);

/// Plain bisection to a bracket width of abs_x.
double bisect(const std::function<double(double)>& f, double a, double b,
              double abs_x = 1e-13, int max_iter = 200);

/// Minimizer of f on [a, b] by golden-section search, tolerance abs_x on x.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double abs_x = 1e-10);

/// Solve the 2x2 system J * dx = -r. Returns false if J is singular.
bool solve2x2(const std::array<std::array<double, 2>, 2>& J,
              const std::array<double, 2>& r, std::array<double, 2>& dx);

/// k-th point of the R2 low-discrepancy sequence on the unit square.
std::array<double, 2> r2_point(std::uint64_t k);

/// n log-spaced points on [lo, hi] (endpoints included, n >= 2).
std::vector<double> log_grid(double lo, double hi, int n);

/// n linearly spaced points on [lo, hi] (endpoints included, n >= 2).
std::vector<double> linear_grid(double lo, double hi, int n);

} // namespace numerics
} // namespace gasfold
