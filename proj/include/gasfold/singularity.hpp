#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gasfold/family.hpp"

namespace gasfold::singularity {

using family::Branch;
using family::SolutionFamily;

/// Z_pm = alpha0 rho^2 A -+ lambda rho Q +- lambda IQ +- alpha2.
double z_pm(const SolutionFamily& fam, double rho, Branch sign);

/// Velocity at which the projection folds, for the given caustic branch.
/// The plus branch uses the closed form -Z+/(lambda rho^2 A); the minus
/// branch locates the root of the fold indicator on the t_u < 0 side.
double critical_u(const SolutionFamily& fam, double rho, Branch branch);

struct CausticSample {
    double rho;
    double t;
    double x;
    Branch branch;
};

struct CuspInfo {
    double rho_c;
    double t_c;
    double x_c;
    Branch branch;
};

struct CausticCurve {
    std::vector<CausticSample> samples;
    std::optional<CuspInfo> cusp;
    int skipped = 0; // grid points whose critical u failed validation
    /// Largest |t(rho) from the fold-indicator route - t(rho) from the
    /// printed plus-branch formula| over the grid (minus branch only).
    std::optional<double> printed_t_deviation;
};

/// Parametric fold locus (t(rho), x(rho)) over the grid, plus the cusp
/// (minimizer of t along the curve). Every emitted sample is validated
/// against the fold indicator at its critical u (|.| < 1e-8).
CausticCurve caustic(const SolutionFamily& fam, const std::vector<double>& rho_grid,
                     Branch branch);

/// Potential of the mass conservation law restricted to the solution,
/// H_pm(rho, t); requires lambda != 0 and D(rho, t) >= 0.
double potential_H(const SolutionFamily& fam, double rho, double t, Branch sign);

struct Gradient2 {
    double d_rho;
    double d_t;
};

/// Analytic partials of H_pm with respect to (rho, t).
Gradient2 H_partials(const SolutionFamily& fam, double rho, double t, Branch sign);

/// Branch-resolved x(rho, t) = x_of(branch_u(rho, t), rho) and its partials.
double x_at(const SolutionFamily& fam, double rho, double t, Branch branch);
Gradient2 x_partials_at(const SolutionFamily& fam, double rho, double t, Branch branch);

struct ShockSample {
    double t;
    double x_s;
    double rho1; // rho1 < rho2
    double rho2;
    double res_H;
    double res_x;
};

struct ShockFront {
    Branch branch;     // u-branch carrying both states
    double t_start;    // birth (cusp) time
    std::vector<ShockSample> samples;
    bool stalled = false;
    double stall_t = 0.0; // last good time when stalled
};

/// Continue the discontinuity born at the cusp over t in
/// [t_range.first, t_range.second] with output step dt. The front solves
/// H(rho1) = H(rho2), x(rho1) = x(rho2) by damped Newton, seeded from the
/// cusp split and thereafter by continuation. A stalled continuation is
/// returned with the partial samples and stalled = true.
ShockFront shock_front(const SolutionFamily& fam, const CuspInfo& cusp,
                       std::pair<double, double> t_range, double dt);

/// As above but throwing ContinuationStall instead of returning partials.
ShockFront shock_front_or_throw(const SolutionFamily& fam, const CuspInfo& cusp,
                                std::pair<double, double> t_range, double dt);

/// Both fronts (one per caustic branch), each continued for t_len past its cusp.
std::vector<ShockFront> shock_fronts(const SolutionFamily& fam,
                                     const std::vector<double>& rho_grid, double t_len,
                                     double dt);

/// Front state at an exact time inside the front's coverage (re-solved, not
/// interpolated).
ShockSample front_state_at(const SolutionFamily& fam, const ShockFront& front, double t);

/// Single-valued discontinuous profile: the multivalued profile with the
/// overhanging fold of each front removed at x_s(t) and the jump pair
/// inserted. Before the first cusp the plain profile is returned.
std::vector<family::ProfileSample> cut_profile(const SolutionFamily& fam, double t,
                                               const std::vector<double>& rho_grid,
                                               const ShockFront& front);

std::vector<family::ProfileSample> cut_profile(const SolutionFamily& fam, double t,
                                               const std::vector<double>& rho_grid,
                                               const std::vector<ShockFront>& fronts);

} // namespace gasfold::singularity
