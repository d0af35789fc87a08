#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gasfold/geometry.hpp"
#include "gasfold/thermo.hpp"

namespace gasfold::family {

enum class Branch { plus, minus };

const char* to_string(Branch b);

/// Constants of the exact two-quadrature solution over a homentropic model.
struct SolutionFamily {
    double lambda = 1.0;
    double alpha0 = 0.0;
    double alpha2 = 0.0;
    double t0 = 0.0;
    double x0 = 0.0;
    thermo::HomentropicModel hm;
};

/// One point of a (possibly multivalued) density profile at fixed t.
struct ProfileSample {
    double x;
    double rho;
    double u;
    Branch branch;
    double t;
};

/// A scalar f(u, rho) together with its pure second partials, as needed by
/// the quotient-equation residual.
struct ScalarField2 {
    std::function<double(double, double)> value;
    std::function<double(double, double)> d_uu;
    std::function<double(double, double)> d_rhorho;
};

/// f_uu - A(rho)^{-2} f_rhorho.
double wave_residual(const ScalarField2& f, double u, double rho,
                     const thermo::HomentropicModel& hm);

/// First quadrature: t(u, rho).
double t_of(const SolutionFamily& fam, double u, double rho);

/// Second quadrature: x(u, rho).
double x_of(const SolutionFamily& fam, double u, double rho);

/// Radicand factor D(rho, t) of the branch resolution; u-roots exist iff >= 0.
double radicand(const SolutionFamily& fam, double rho, double t);

/// Resolve t(u, rho) = t for u on the requested branch.
double branch_u(const SolutionFamily& fam, double rho, double t, Branch sign);

/// Analytic partials of (t, x) with respect to the surface parameters (u, rho).
struct SurfacePartials {
    double t_u;
    double t_rho;
    double x_u;
    double x_rho;
};

SurfacePartials surface_partials(const SolutionFamily& fam, double u, double rho);

/// t_u*x_rho - t_rho*x_u; vanishes exactly on the caustic.
double fold_indicator(const SolutionFamily& fam, double u, double rho);

/// The solution surface (a, b) = (u, rho) -> (t, x, u, rho) with analytic partials.
geometry::SurfaceParametrization solution_surface(const SolutionFamily& fam);

/// Coefficients of the closed 1-form kappa = dx + (du_coeff) du + (drho_coeff) drho.
struct VarkappaCoeffs {
    double du_coeff;
    double drho_coeff;
};

VarkappaCoeffs varkappa_coeffs(const SolutionFamily& fam, double u, double rho);

/// Both u-branches of the density profile at time t over the rho grid,
/// sorted by x within each branch; duplicates within 1e-12 in (x, rho) merged.
std::vector<ProfileSample> profile(const SolutionFamily& fam, double t,
                                   const std::vector<double>& rho_grid);

/// The same samples ordered along the connected curve (minus branch by
/// ascending rho, then plus branch by descending rho).
std::vector<ProfileSample> path_profile(const SolutionFamily& fam, double t,
                                        const std::vector<double>& rho_grid);

/// Number of folds of a path-ordered profile: half the number of reversals
/// of the x-direction along the path.
int fold_count(const std::vector<ProfileSample>& path);

/// Number of curve crossings of the vertical line x = probe.
int preimage_count(const std::vector<ProfileSample>& path, double probe);

} // namespace gasfold::family
