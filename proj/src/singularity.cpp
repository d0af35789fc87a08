#include "gasfold/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gasfold/errors.hpp"
#include "gasfold/numerics.hpp"

namespace gasfold::singularity {

namespace {

void require_family(const SolutionFamily& fam, const char* op) {
    if (fam.lambda == 0.0)
        throw DegenerateFamily(std::string(op) + ": requires lambda != 0");
}

// Radicand and its exact partials.
struct Radicand {
    double D;
    double D_rho;
    double D_t;
};

Radicand radicand_full(const SolutionFamily& fam, double rho, double t) {
    const auto& hm = fam.hm;
    Radicand r;
    r.D = family::radicand(fam, rho, t);
    r.D_rho = fam.lambda * (t - fam.t0) + 0.5 * fam.alpha0 * fam.alpha0 -
              fam.lambda * fam.lambda * hm.Q(rho);
    r.D_t = rho * fam.lambda;
    return r;
}

double branch_sigma(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

// Closed caustic time, printed with Z+ (serves both branches by the
// u -> -2 alpha0/lambda - u symmetry of the first quadrature).
double caustic_t_printed(const SolutionFamily& fam, double rho) {
    const auto& hm = fam.hm;
    double A = hm.A(rho);
    double Q = hm.Q(rho);
    double Zp = z_pm(fam, rho, Branch::plus);
    double l = fam.lambda;
    return Zp * Zp / (2.0 * l * A * A * rho * rho * rho * rho) +
           Zp / rho * (1.0 - fam.alpha0 / (l * rho * A)) - fam.alpha0 * rho * A + l * Q +
           fam.t0;
}

double caustic_x_printed(const SolutionFamily& fam, double rho, Branch branch) {
    const auto& hm = fam.hm;
    double A = hm.A(rho);
    double Q = hm.Q(rho);
    double Z = z_pm(fam, rho, branch);
    double l = fam.lambda;
    double s = branch_sigma(branch);
    double rho3 = rho * rho * rho;
    double rho4 = rho3 * rho;
    double rho6 = rho3 * rho3;
    return fam.x0 - Z * Z * Z / (3.0 * l * l * A * A * A * rho6) +
           fam.alpha0 * Z * Z / (2.0 * l * l * A * A * rho4) + s * fam.alpha0 * Z / (l * rho) -
           s * Z * Z / (l * A * rho3) - fam.alpha0 * Q;
}

double caustic_t_branch(const SolutionFamily& fam, double rho, Branch branch) {
    if (branch == Branch::plus) return caustic_t_printed(fam, rho);
    return family::t_of(fam, critical_u(fam, rho, branch), rho);
}

} // namespace

double z_pm(const SolutionFamily& fam, double rho, Branch sign) {
    const auto& hm = fam.hm;
    double s = branch_sigma(sign);
    return fam.alpha0 * rho * rho * hm.A(rho) - s * fam.lambda * rho * hm.Q(rho) +
           s * fam.lambda * hm.IQ(rho) + s * fam.alpha2;
}

double critical_u(const SolutionFamily& fam, double rho, Branch branch) {
    require_family(fam, "critical_u");
    if (branch == Branch::plus) {
        double A = fam.hm.A(rho);
        return -z_pm(fam, rho, Branch::plus) / (fam.lambda * rho * rho * A);
    }
    // Minus branch: root of the fold indicator on the t_u < 0 side, located
    // without the closed form so the route stays independently checkable.
    auto g = [&fam, rho](double w) {
        return family::fold_indicator(fam, (w - fam.alpha0) / fam.lambda, rho);
    };
    double g0 = g(0.0);
    if (g0 < 0.0)
        throw DomainError("critical_u: fold indicator negative at the branch center, rho=" +
                          std::to_string(rho));
    double W = 1.0;
    int k = 0;
    while (g(-W) >= 0.0 && k++ < 80) W *= 2.0;
    if (k >= 80)
        throw DomainError("critical_u: failed to bracket the minus-branch critical velocity");
    double w_star = numerics::bisect(g, -W, 0.0, 1e-13);
    return (w_star - fam.alpha0) / fam.lambda;
}

CausticCurve caustic(const SolutionFamily& fam, const std::vector<double>& rho_grid,
                     Branch branch) {
    require_family(fam, "caustic");
    CausticCurve curve;
    double max_dev = 0.0;
    std::vector<double> grid = rho_grid;
    std::sort(grid.begin(), grid.end());
    for (double rho : grid) {
        double u_c, t, x;
        try {
            u_c = critical_u(fam, rho, branch);
            t = branch == Branch::plus ? caustic_t_printed(fam, rho)
                                       : family::t_of(fam, u_c, rho);
            x = caustic_x_printed(fam, rho, branch);
        } catch (const DomainError&) {
            ++curve.skipped;
            continue;
        }
        if (std::abs(family::fold_indicator(fam, u_c, rho)) >= 1e-8) {
            ++curve.skipped;
            continue;
        }
        if (branch == Branch::minus)
            max_dev = std::max(max_dev, std::abs(t - caustic_t_printed(fam, rho)));
        curve.samples.push_back({rho, t, x, branch});
    }
    if (branch == Branch::minus) curve.printed_t_deviation = max_dev;

    // Cusp: interior minimizer of t(rho) along the curve.
    if (curve.samples.size() >= 3) {
        std::size_t imin = 0;
        for (std::size_t i = 1; i < curve.samples.size(); ++i)
            if (curve.samples[i].t < curve.samples[imin].t) imin = i;
        if (imin > 0 && imin + 1 < curve.samples.size()) {
            auto t_of_rho = [&fam, branch](double rho) {
                return caustic_t_branch(fam, rho, branch);
            };
            double rho_c = numerics::golden_min(t_of_rho, curve.samples[imin - 1].rho,
                                                curve.samples[imin + 1].rho, 1e-10);
            double u_c = critical_u(fam, rho_c, branch);
            curve.cusp = CuspInfo{rho_c, family::t_of(fam, u_c, rho_c),
                                  family::x_of(fam, u_c, rho_c), branch};
        }
    }
    return curve;
}

double potential_H(const SolutionFamily& fam, double rho, double t, Branch sign) {
    require_family(fam, "potential_H");
    const auto& hm = fam.hm;
    double D = family::radicand(fam, rho, t);
    if (D < 0.0)
        throw OutsideSupport("potential_H: negative radicand at rho=" + std::to_string(rho) +
                                 ", t=" + std::to_string(t),
                             D);
    double K = fam.lambda * rho * hm.Q(rho) - fam.lambda * hm.IQ(rho) - fam.alpha2;
    double s = branch_sigma(sign);
    return -s / (fam.lambda * std::sqrt(rho)) * std::sqrt(2.0 * D) * K;
}

Gradient2 H_partials(const SolutionFamily& fam, double rho, double t, Branch sign) {
    require_family(fam, "H_partials");
    const auto& hm = fam.hm;
    auto r = radicand_full(fam, rho, t);
    if (r.D <= 0.0)
        throw OutsideSupport("H_partials: non-positive radicand", r.D);
    double S = std::sqrt(2.0 * r.D);
    double S_rho = r.D_rho / S;
    double S_t = r.D_t / S;
    double K = fam.lambda * rho * hm.Q(rho) - fam.lambda * hm.IQ(rho) - fam.alpha2;
    double K_rho = fam.lambda * hm.dp(rho); // lambda * rho * Q'(rho)
    double s = branch_sigma(sign);
    double inv_sqrt = 1.0 / std::sqrt(rho);
    Gradient2 g;
    g.d_rho = -s / fam.lambda *
              (-0.5 * inv_sqrt / rho * S * K + inv_sqrt * (S_rho * K + S * K_rho));
    g.d_t = -s / fam.lambda * inv_sqrt * S_t * K;
    return g;
}

double x_at(const SolutionFamily& fam, double rho, double t, Branch branch) {
    return family::x_of(fam, family::branch_u(fam, rho, t, branch), rho);
}

Gradient2 x_partials_at(const SolutionFamily& fam, double rho, double t, Branch branch) {
    double u = family::branch_u(fam, rho, t, branch);
    auto r = radicand_full(fam, rho, t);
    if (r.D <= 0.0)
        throw OutsideSupport("x_partials_at: non-positive radicand", r.D);
    double S = std::sqrt(2.0 * rho * r.D);
    double S_rho = (r.D + rho * r.D_rho) / S;
    double S_t = rho * r.D_t / S;
    double s = branch_sigma(branch);
    double U_rho = s * (S_rho / (fam.lambda * rho) - S / (fam.lambda * rho * rho));
    double U_t = s * S_t / (fam.lambda * rho);
    auto sp = family::surface_partials(fam, u, rho);
    return {sp.x_u * U_rho + sp.x_rho, sp.x_u * U_t};
}

namespace {

struct PairState {
    double rho1;
    double rho2;
};

struct SolveResult {
    bool converged = false;
    PairState state{};
    double res_H = 0.0;
    double res_x = 0.0;
};

SolveResult solve_front_system(const SolutionFamily& fam, Branch branch, double t,
                               PairState seed) {
    auto residual = [&](const PairState& p, double& rH, double& rx) -> bool {
        try {
            rH = potential_H(fam, p.rho1, t, branch) - potential_H(fam, p.rho2, t, branch);
            rx = x_at(fam, p.rho1, t, branch) - x_at(fam, p.rho2, t, branch);
        } catch (const OutsideSupport&) {
            return false;
        } catch (const DomainError&) {
            return false;
        }
        return std::isfinite(rH) && std::isfinite(rx);
    };

    SolveResult out;
    PairState p = seed;
    double rH, rx;
    if (!residual(p, rH, rx)) return out;
    double norm = std::max(std::abs(rH), std::abs(rx));
    for (int it = 0; it < 50; ++it) {
        if (norm < 1e-10) {
            out.converged = true;
            out.state = p;
            out.res_H = rH;
            out.res_x = rx;
            return out;
        }
        std::array<std::array<double, 2>, 2> J;
        try {
            J[0][0] = H_partials(fam, p.rho1, t, branch).d_rho;
            J[0][1] = -H_partials(fam, p.rho2, t, branch).d_rho;
            J[1][0] = x_partials_at(fam, p.rho1, t, branch).d_rho;
            J[1][1] = -x_partials_at(fam, p.rho2, t, branch).d_rho;
        } catch (const OutsideSupport&) {
            return out;
        }
        std::array<double, 2> step;
        if (!numerics::solve2x2(J, {rH, rx}, step)) return out;
        // Damping: halve the step while the residual norm does not improve.
        double scale = 1.0;
        bool accepted = false;
        for (int h = 0; h < 20; ++h) {
            PairState cand{p.rho1 + scale * step[0], p.rho2 + scale * step[1]};
            double cH, cx;
            if (cand.rho1 > 0.0 && cand.rho2 > 0.0 && residual(cand, cH, cx)) {
                double cnorm = std::max(std::abs(cH), std::abs(cx));
                if (cnorm < norm || cnorm < 1e-10) {
                    p = cand;
                    rH = cH;
                    rx = cx;
                    norm = cnorm;
                    accepted = true;
                    break;
                }
            }
            scale *= 0.5;
        }
        if (!accepted) return out;
    }
    return out;
}

Branch cusp_u_branch(const SolutionFamily& fam, const CuspInfo& cusp) {
    double u_c = critical_u(fam, cusp.rho_c, cusp.branch);
    return fam.lambda * u_c + fam.alpha0 >= 0.0 ? Branch::plus : Branch::minus;
}

// Curvature of the caustic time at the cusp, used to scale the birth seed.
double cusp_t_curvature(const SolutionFamily& fam, const CuspInfo& cusp) {
    double h = std::max(1e-4, 1e-4 * cusp.rho_c);
    double tm = caustic_t_branch(fam, cusp.rho_c - h, cusp.branch);
    double t0 = cusp.t_c;
    double tp = caustic_t_branch(fam, cusp.rho_c + h, cusp.branch);
    double second = (tp - 2.0 * t0 + tm) / (h * h);
    return std::max(std::abs(second), 1e-12);
}

} // namespace

ShockFront shock_front(const SolutionFamily& fam, const CuspInfo& cusp,
                       std::pair<double, double> t_range, double dt) {
    require_family(fam, "shock_front");
    if (!(dt > 0.0)) throw DomainError("shock_front: requires dt > 0");
    if (t_range.first < cusp.t_c - 1e-12)
        throw DomainError("shock_front: t range must start at or after the cusp time");

    ShockFront front;
    front.branch = cusp_u_branch(fam, cusp);
    front.t_start = cusp.t_c;

    const double curvature = cusp_t_curvature(fam, cusp);
    auto seed_width = [&](double t) {
        double dt_c = std::max(t - cusp.t_c, 0.0);
        double asym = std::sqrt(3.0) * std::sqrt(2.0 * dt_c / curvature);
        return std::max(1e-3 * cusp.rho_c, asym);
    };

    bool have_state = false;
    PairState state{};
    double t_prev = cusp.t_c;
    double first_out = std::max(t_range.first, cusp.t_c + dt);

    for (double t_out = first_out; t_out <= t_range.second + 1e-12; t_out += dt) {
        // March from the previous good time to t_out, halving the substep on
        // failure (the front is steep near its birth).
        double t_cur = t_prev;
        PairState cur = state;
        bool ok = true;
        while (t_cur < t_out - 1e-14) {
            double step = t_out - t_cur;
            bool advanced = false;
            for (int h = 0; h <= 12; ++h) {
                double t_try = t_cur + step;
                PairState seed = cur;
                if (!have_state) {
                    double w = seed_width(t_try);
                    seed = {cusp.rho_c - w, cusp.rho_c + w};
                }
                auto res = solve_front_system(fam, front.branch, t_try, seed);
                if (!res.converged && !have_state) {
                    // Mixed pairing fallback at birth.
                    Branch other = front.branch == Branch::plus ? Branch::minus : Branch::plus;
                    auto res2 = solve_front_system(fam, other, t_try, seed);
                    if (res2.converged &&
                        std::abs(res2.state.rho2 - res2.state.rho1) > 1e-10) {
                        front.branch = other;
                        res = res2;
                    }
                }
                if (res.converged) {
                    if (std::abs(res.state.rho2 - res.state.rho1) < 1e-10) {
                        // States re-merged; the front ends here.
                        return front;
                    }
                    cur = res.state;
                    if (cur.rho1 > cur.rho2) std::swap(cur.rho1, cur.rho2);
                    t_cur = t_try;
                    have_state = true;
                    advanced = true;
                    break;
                }
                step *= 0.5;
            }
            if (!advanced) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            front.stalled = true;
            front.stall_t = t_prev;
            return front;
        }
        state = cur;
        t_prev = t_out;
        double rH = potential_H(fam, state.rho1, t_out, front.branch) -
                    potential_H(fam, state.rho2, t_out, front.branch);
        double rx = x_at(fam, state.rho1, t_out, front.branch) -
                    x_at(fam, state.rho2, t_out, front.branch);
        double xs = 0.5 * (x_at(fam, state.rho1, t_out, front.branch) +
                           x_at(fam, state.rho2, t_out, front.branch));
        front.samples.push_back({t_out, xs, state.rho1, state.rho2, rH, rx});
    }
    return front;
}

ShockFront shock_front_or_throw(const SolutionFamily& fam, const CuspInfo& cusp,
                                std::pair<double, double> t_range, double dt) {
    ShockFront f = shock_front(fam, cusp, t_range, dt);
    if (f.stalled)
        throw ContinuationStall("shock_front: continuation stalled at t=" +
                                    std::to_string(f.stall_t),
                                f.stall_t);
    return f;
}

std::vector<ShockFront> shock_fronts(const SolutionFamily& fam,
                                     const std::vector<double>& rho_grid, double t_len,
                                     double dt) {
    std::vector<ShockFront> fronts;
    for (Branch b : {Branch::plus, Branch::minus}) {
        auto curve = caustic(fam, rho_grid, b);
        if (!curve.cusp) continue;
        fronts.push_back(
            shock_front(fam, *curve.cusp, {curve.cusp->t_c, curve.cusp->t_c + t_len}, dt));
    }
    return fronts;
}

ShockSample front_state_at(const SolutionFamily& fam, const ShockFront& front, double t) {
    if (front.samples.empty()) throw DomainError("front_state_at: empty front");
    if (t < front.t_start - 1e-12 || t > front.samples.back().t + 1e-12)
        throw DomainError("front_state_at: t outside front coverage");
    // Nearest sample as the continuation seed, then re-solve at the exact t.
    const ShockSample* best = &front.samples.front();
    for (const auto& s : front.samples)
        if (std::abs(s.t - t) < std::abs(best->t - t)) best = &s;
    auto res = solve_front_system(fam, front.branch, t, {best->rho1, best->rho2});
    if (!res.converged)
        throw ContinuationStall("front_state_at: re-solve failed at t=" + std::to_string(t), t);
    if (res.state.rho1 > res.state.rho2) std::swap(res.state.rho1, res.state.rho2);
    double xs = 0.5 * (x_at(fam, res.state.rho1, t, front.branch) +
                       x_at(fam, res.state.rho2, t, front.branch));
    return {t, xs, res.state.rho1, res.state.rho2, res.res_H, res.res_x};
}

namespace {

std::vector<family::ProfileSample> apply_cut(const SolutionFamily& fam,
                                             std::vector<family::ProfileSample> path,
                                             const ShockSample& cut, Branch branch, double t) {
    std::vector<family::ProfileSample> out;
    out.reserve(path.size() + 2);
    bool inserted = false;
    for (const auto& s : path) {
        bool inside = s.branch == branch && s.rho > cut.rho1 + 1e-12 && s.rho < cut.rho2 - 1e-12;
        if (!inside) {
            out.push_back(s);
            continue;
        }
        if (!inserted) {
            // The path enters the discarded lobe; emit the jump pair in path order.
            double u1 = family::branch_u(fam, cut.rho1, t, branch);
            double u2 = family::branch_u(fam, cut.rho2, t, branch);
            family::ProfileSample a{cut.x_s, cut.rho1, u1, branch, t};
            family::ProfileSample b{cut.x_s, cut.rho2, u2, branch, t};
            // path_profile walks the minus branch by ascending rho and the
            // plus branch by descending rho.
            bool ascending = branch == Branch::minus;
            if (ascending) {
                out.push_back(a);
                out.push_back(b);
            } else {
                out.push_back(b);
                out.push_back(a);
            }
            inserted = true;
        }
    }
    return out;
}

} // namespace

std::vector<family::ProfileSample> cut_profile(const SolutionFamily& fam, double t,
                                               const std::vector<double>& rho_grid,
                                               const std::vector<ShockFront>& fronts) {
    auto path = family::path_profile(fam, t, rho_grid);
    for (const auto& front : fronts) {
        if (front.samples.empty() || t < front.t_start) continue;
        auto cut = front_state_at(fam, front, t);
        path = apply_cut(fam, std::move(path), cut, front.branch, t);
    }
    return path;
}

std::vector<family::ProfileSample> cut_profile(const SolutionFamily& fam, double t,
                                               const std::vector<double>& rho_grid,
                                               const ShockFront& front) {
    return cut_profile(fam, t, rho_grid, std::vector<ShockFront>{front});
}

} // namespace gasfold::singularity
