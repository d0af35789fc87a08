#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gasfold/family.hpp"

namespace gasfold::oracle {

/// Central-difference settings. h is relative to the point's magnitude.
struct FDConfig {
    double h = 1e-5;
    bool richardson = true;
};

/// Central-difference partial of f at `point` with respect to `index`.
double fd_partial(const std::function<double(const std::vector<double>&)>& f,
                  std::vector<double> point, std::size_t index, FDConfig cfg = {});

/// One-dimensional convenience wrapper.
double fd_derivative(const std::function<double(double)>& f, double x, FDConfig cfg = {});

/// Partials of f(u, rho) with respect to u (index 0) or rho (index 1).
double fd_partial2(const std::function<double(double, double)>& f, double u, double rho,
                   std::size_t index, FDConfig cfg = {});

/// Adaptive Gauss-Kronrod (G7,K15) integral of f over [a, b] to absolute
/// tolerance tol. An empty interval integrates to zero.
double nquad(const std::function<double(double)>& f, double a, double b, double tol = 1e-10);

/// Grid scan for the fold locus of the family's solution surface: cells of
/// the (u, rho) grid where the indicator t_u*x_rho - t_rho*x_u changes sign
/// along u, refined by bisection in u. Returns (u, rho) points.
std::vector<std::pair<double, double>> fold_scan(const family::SolutionFamily& fam,
                                                 const std::vector<double>& u_grid,
                                                 const std::vector<double>& rho_grid);

/// Trapezoidal integral of rho dx over [window.first, window.second] along a
/// path-ordered profile that is single-valued except for at most one jump
/// (consecutive samples sharing x). Throws OracleError on any other fold.
double mass_integral(const std::vector<family::ProfileSample>& profile,
                     std::pair<double, double> x_window);

} // namespace gasfold::oracle
