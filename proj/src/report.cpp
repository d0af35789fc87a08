#include "gasfold/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gasfold/csvio.hpp"
#include "gasfold/errors.hpp"
#include "gasfold/geometry.hpp"
#include "gasfold/numerics.hpp"
#include "gasfold/oracle.hpp"
#include "gasfold/singularity.hpp"

namespace gasfold::cli {

using family::Branch;
using family::SolutionFamily;

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"worst_residual", c.worst},
                               {"tolerance", c.tol}});
    j["all_pass"] = all_pass();
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  worst=" << fmt_double(c.worst)
           << "  tol=" << fmt_double(c.tol) << "\n";
    os << (all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

thermo::HomentropicModel perturb_exponent(const thermo::HomentropicModel& hm, double delta) {
    if (delta == 0.0) return hm;
    thermo::HomentropicModel out = hm;
    auto A_base = hm.A_of_rho;
    auto dp_base = hm.dp_of_rho;
    out.A_of_rho = [A_base, delta](double rho) { return A_base(rho) * std::pow(rho, delta); };
    out.dp_of_rho = [dp_base, delta](double rho) {
        return dp_base(rho) * std::pow(rho, 2.0 * delta);
    };
    out.descriptor = hm.descriptor + " (exponent perturbed by " + fmt_double(delta) + ")";
    return out;
}

namespace {

struct Window {
    double u_lo, u_hi, rho_lo, rho_hi;
};

Window sample_window(const SolutionFamily& fam) {
    double lo = std::max(fam.hm.rho_range.lo, 0.2);
    double hi = std::min(fam.hm.rho_range.hi, 3.0);
    if (!(hi > lo)) {
        lo = fam.hm.rho_range.lo;
        hi = fam.hm.rho_range.hi;
    }
    return {-3.0, 1.0, lo, hi};
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Least feasible time of the branch resolution at fixed rho (D = 0).
double t_support_edge(const SolutionFamily& fam, double rho) {
    double c = 0.5 * rho * fam.alpha0 * fam.alpha0 - fam.lambda * fam.alpha2 -
               fam.lambda * fam.lambda * fam.hm.IQ(rho);
    return fam.t0 - c / (rho * fam.lambda);
}

double seg_dist(std::pair<double, double> p, std::pair<double, double> a,
                std::pair<double, double> b) {
    double vx = b.first - a.first, vy = b.second - a.second;
    double wx = p.first - a.first, wy = p.second - a.second;
    double vv = vx * vx + vy * vy;
    double s = vv > 0.0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
    double dx = wx - s * vx, dy = wy - s * vy;
    return std::sqrt(dx * dx + dy * dy);
}

double directed_hausdorff(const std::vector<std::pair<double, double>>& pts,
                          const std::vector<std::pair<double, double>>& polyline) {
    if (pts.empty() || polyline.size() < 2) return 0.0;
    double worst = 0.0;
    for (const auto& p : pts) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < polyline.size(); ++i)
            best = std::min(best, seg_dist(p, polyline[i - 1], polyline[i]));
        worst = std::max(worst, best);
    }
    return worst;
}

// Detect A(rho) = A0 rho^m to machine accuracy; used to decide whether the
// algebraically reduced power-law forms apply.
bool fit_power_law(const thermo::HomentropicModel& hm, double& A0, double& m) {
    Window w{0, 0, std::max(hm.rho_range.lo, 0.2), std::min(hm.rho_range.hi, 3.0)};
    double r1 = w.rho_lo, r2 = w.rho_hi;
    double a1 = hm.A_of_rho(r1), a2 = hm.A_of_rho(r2);
    if (!(a1 > 0.0) || !(a2 > 0.0)) return false;
    m = std::log(a2 / a1) / std::log(r2 / r1);
    A0 = a1 / std::pow(r1, m);
    for (double rho : numerics::log_grid(r1, r2, 20)) {
        if (rel_err(A0 * std::pow(rho, m), hm.A_of_rho(rho)) > 1e-12) return false;
    }
    return true;
}

double reduced_t(const SolutionFamily& fam, double A0, double m, double u, double rho) {
    double c = 2.0 * m * m + 5.0 * m + 3.0;
    return 0.5 * fam.lambda * u * u + fam.alpha0 * u + fam.alpha2 / rho +
           fam.lambda * A0 * A0 * std::pow(rho, 2.0 * m + 2.0) / (2.0 * c) + fam.t0;
}

double reduced_x(const SolutionFamily& fam, double A0, double m, double u, double rho) {
    double c = 2.0 * m * m + 5.0 * m + 3.0;
    double lu = fam.lambda * u;
    return ((m + 1.0) * (2.0 * m + 3.0) *
                (fam.alpha2 * u +
                 rho * (fam.lambda * u * u * u / 3.0 + 0.5 * fam.alpha0 * u * u + fam.x0)) -
            A0 * A0 * std::pow(rho, 2.0 * m + 3.0) *
                (m * (lu + fam.alpha0) + lu + 1.5 * fam.alpha0)) /
           (rho * c);
}

double reduced_z(const SolutionFamily& fam, double A0, double m, double rho, Branch sign) {
    double s = sign == Branch::plus ? 1.0 : -1.0;
    return fam.alpha0 * A0 * std::pow(rho, m + 2.0) -
           s * fam.lambda * A0 * A0 * std::pow(rho, 2.0 * m + 3.0) / (2.0 * m + 3.0) +
           s * fam.alpha2;
}

} // namespace

Report run_validation(const SolutionFamily& fam, const thermo::HomentropicModel& forms_hm,
                      ValidationOptions opts) {
    Report report;
    const Window w = sample_window(fam);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto rand_u = [&] { return w.u_lo + (w.u_hi - w.u_lo) * unif(rng); };
    auto rand_rho = [&] { return w.rho_lo + (w.rho_hi - w.rho_lo) * unif(rng); };

    auto surf = family::solution_surface(fam);
    auto [omega1, omega2] = geometry::effective_forms(forms_hm);

    { // Master check: both structure forms pull back to zero on the surface.
        double worst = 0.0;
        for (int k = 0; k < opts.n_master; ++k) {
            auto q = numerics::r2_point(static_cast<std::uint64_t>(k));
            double u = w.u_lo + (w.u_hi - w.u_lo) * q[0];
            double rho = w.rho_lo + (w.rho_hi - w.rho_lo) * q[1];
            worst = std::max(worst, std::abs(geometry::restrict_2form(omega1, surf, u, rho)));
            worst = std::max(worst, std::abs(geometry::restrict_2form(omega2, surf, u, rho)));
        }
        report.checks.push_back({"solution_property", worst < 1e-8, worst, 1e-8});
    }

    { // Generic quadratures against the algebraically reduced power-law forms.
        double A0, m;
        if (fit_power_law(fam.hm, A0, m)) {
            double worst = 0.0;
            auto us = numerics::linear_grid(w.u_lo, w.u_hi, 100);
            auto rhos = numerics::log_grid(w.rho_lo, w.rho_hi, 100);
            for (double u : us)
                for (double rho : rhos) {
                    worst = std::max(worst, rel_err(family::t_of(fam, u, rho),
                                                    reduced_t(fam, A0, m, u, rho)));
                    worst = std::max(worst, rel_err(family::x_of(fam, u, rho),
                                                    reduced_x(fam, A0, m, u, rho)));
                }
            for (double rho : rhos)
                for (Branch b : {Branch::plus, Branch::minus})
                    worst = std::max(worst, rel_err(singularity::z_pm(fam, rho, b),
                                                    reduced_z(fam, A0, m, rho, b)));
            report.checks.push_back({"specialization_identity", worst < 1e-12, worst, 1e-12});
        }
    }

    { // Quotient-equation residual of the separated constraint.
        family::ScalarField2 f;
        const SolutionFamily fc = fam;
        f.value = [fc](double u, double rho) {
            return rho * (0.5 * fc.lambda * u * u + fc.alpha0 * u) + fc.lambda * fc.hm.IQ(rho);
        };
        f.d_uu = [fc](double, double rho) { return fc.lambda * rho; };
        f.d_rhorho = [fc](double, double rho) { return fc.lambda * fc.hm.dp(rho) / rho; };
        double worst = 0.0;
        for (int k = 0; k < opts.n_small; ++k)
            worst = std::max(worst,
                             std::abs(family::wave_residual(f, rand_u(), rand_rho(), fam.hm)));
        report.checks.push_back({"wave_quotient_residual", worst < 1e-9, worst, 1e-9});
    }

    { // The 1-form kappa is closed...
        double worst = 0.0;
        oracle::FDConfig fd;
        for (int k = 0; k < opts.n_small; ++k) {
            double u = rand_u(), rho = rand_rho();
            double lhs = oracle::fd_partial2(
                [&fam](double uu, double rr) { return family::varkappa_coeffs(fam, uu, rr).du_coeff; },
                u, rho, 1, fd);
            double rhs = oracle::fd_partial2(
                [&fam](double uu, double rr) {
                    return family::varkappa_coeffs(fam, uu, rr).drho_coeff;
                },
                u, rho, 0, fd);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        report.checks.push_back({"varkappa_closedness", worst < 1e-6, worst, 1e-6});
    }

    { // ...and the second quadrature is its potential.
        double worst = 0.0;
        for (int k = 0; k < opts.n_small; ++k) {
            double u = rand_u(), rho = rand_rho();
            auto kap = family::varkappa_coeffs(fam, u, rho);
            auto sp = family::surface_partials(fam, u, rho);
            worst = std::max(worst, std::abs(sp.x_u + kap.du_coeff));
            worst = std::max(worst, std::abs(sp.x_rho + kap.drho_coeff));
        }
        report.checks.push_back({"varkappa_gradient", worst < 1e-10, worst, 1e-10});
    }

    if (fam.lambda != 0.0) { // dH = Theta restricted to the solution.
        double worst = 0.0;
        oracle::FDConfig fd;
        for (int k = 0; k < opts.n_small; ++k) {
            double rho = rand_rho();
            double t = t_support_edge(fam, rho) +
                       (fam.lambda > 0.0 ? 1.0 : -1.0) * (0.1 + 2.9 * unif(rng));
            for (Branch b : {Branch::plus, Branch::minus}) {
                double H_rho = oracle::fd_partial2(
                    [&fam, b](double rr, double tt) {
                        return singularity::potential_H(fam, rr, tt, b);
                    },
                    rho, t, 0, fd);
                double H_t = oracle::fd_partial2(
                    [&fam, b](double rr, double tt) {
                        return singularity::potential_H(fam, rr, tt, b);
                    },
                    rho, t, 1, fd);
                auto xp = singularity::x_partials_at(fam, rho, t, b);
                double U = family::branch_u(fam, rho, t, b);
                worst = std::max(worst, std::abs(H_rho - rho * xp.d_rho));
                worst = std::max(worst, std::abs(H_t - rho * (xp.d_t - U)));
            }
        }
        report.checks.push_back({"potential_gradient", worst < 1e-6, worst, 1e-6});
    }

    if (fam.lambda != 0.0) { // Parametric caustic against the brute-force fold scan.
        double lo = std::max(fam.hm.rho_range.lo, 0.25);
        double hi = std::min(fam.hm.rho_range.hi, 12.0);
        auto rho_grid = numerics::log_grid(lo, hi, 1500);
        auto plus = singularity::caustic(fam, rho_grid, Branch::plus);
        auto minus = singularity::caustic(fam, rho_grid, Branch::minus);
        double t_lo = 0.0, t_hi = 0.0;
        if (plus.cusp) {
            t_lo = plus.cusp->t_c - 0.5;
            t_hi = plus.cusp->t_c + 3.0;
        }
        const double pad = 0.05;
        // Strict-window point sets are measured against padded reference
        // polylines, so window edges do not register as false distance.
        std::vector<std::pair<double, double>> para_pts[2], para_poly[2];
        double u_lo = 1e300, u_hi = -1e300;
        for (const auto& c : {plus, minus})
            for (const auto& s : c.samples) {
                double u_c = singularity::critical_u(fam, s.rho, s.branch);
                u_lo = std::min(u_lo, u_c);
                u_hi = std::max(u_hi, u_c);
                int b = s.branch == Branch::plus ? 0 : 1;
                if (s.t >= t_lo - pad && s.t <= t_hi + pad) para_poly[b].emplace_back(s.t, s.x);
                if (s.t >= t_lo && s.t <= t_hi) para_pts[b].emplace_back(s.t, s.x);
            }
        auto u_grid = numerics::linear_grid(u_lo - 1.0, u_hi + 1.0, 240);
        auto hits = oracle::fold_scan(fam, u_grid, rho_grid);
        std::vector<std::pair<double, double>> scan_pts[2], scan_poly[2];
        for (auto [u, rho] : hits) {
            double t = family::t_of(fam, u, rho);
            int b = fam.lambda * u + fam.alpha0 >= 0.0 ? 0 : 1;
            if (t >= t_lo - pad && t <= t_hi + pad)
                scan_poly[b].emplace_back(t, family::x_of(fam, u, rho));
            if (t >= t_lo && t <= t_hi) scan_pts[b].emplace_back(t, family::x_of(fam, u, rho));
        }
        double worst = 0.0;
        for (int b = 0; b < 2; ++b) {
            worst = std::max(worst, directed_hausdorff(scan_pts[b], para_poly[b]));
            worst = std::max(worst, directed_hausdorff(para_pts[b], scan_poly[b]));
        }
        report.checks.push_back({"caustic_fold_crosscheck", worst < 1e-3, worst, 1e-3});
    }

    { // Effectivity relations of the normalized pair.
        double worst = 0.0;
        for (int k = 0; k < opts.n_small; ++k) {
            double u = rand_u(), rho = rand_rho();
            worst = std::max(worst, std::abs(geometry::wedge_pair(omega1, omega2, u, rho)));
            worst = std::max(worst, std::abs(geometry::wedge_pair(omega1, omega1, u, rho) +
                                             geometry::wedge_pair(omega2, omega2, u, rho)));
        }
        report.checks.push_back({"effectivity_relations", worst < 1e-12, worst, 1e-12});
    }

    { // The operator squares to the identity.
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            auto W = geometry::aw_matrix(forms_hm, rand_u(), rand_rho());
            auto W2 = geometry::mat_mul(W, W);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    worst = std::max(worst, std::abs(W2[i][j] - (i == j ? 1.0 : 0.0)));
        }
        report.checks.push_back({"aw_involution", worst < 1e-12, worst, 1e-12});
    }

    { // Characteristic fields: eigenvectors and the defining relation.
        double worst = 0.0;
        for (int k = 0; k < opts.n_small / 10; ++k) {
            double u = rand_u(), rho = rand_rho();
            auto W = geometry::aw_matrix(forms_hm, u, rho);
            geometry::CharacteristicFields cf;
            try {
                cf = geometry::characteristic_fields(forms_hm, u, rho);
            } catch (const SingularCharacteristic&) {
                continue;
            }
            auto eig = [&](const geometry::Vec4& X, double sign) {
                auto WX = geometry::mat_vec(W, X);
                for (std::size_t i = 0; i < 4; ++i)
                    worst = std::max(worst, std::abs(WX[i] - sign * X[i]));
            };
            eig(cf.X_plus, 1.0);
            eig(cf.Y_plus, 1.0);
            eig(cf.X_minus, -1.0);
            eig(cf.Y_minus, -1.0);
            geometry::Vec4 X{unif(rng) - 0.5, unif(rng) - 0.5, unif(rng) - 0.5, unif(rng) - 0.5};
            auto lhs = geometry::contract(omega2, u, rho, X);
            auto rhs = geometry::contract(omega1, u, rho, geometry::mat_vec(W, X));
            for (std::size_t i = 0; i < 4; ++i)
                worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
        }
        report.checks.push_back({"characteristic_fields", worst < 1e-10, worst, 1e-10});
    }

    { // Analytic surface partials against finite differences.
        double worst = 0.0;
        oracle::FDConfig fd;
        for (int k = 0; k < opts.n_small / 5; ++k) {
            double u = rand_u(), rho = rand_rho();
            auto sp = family::surface_partials(fam, u, rho);
            auto t_fn = [&fam](double uu, double rr) { return family::t_of(fam, uu, rr); };
            auto x_fn = [&fam](double uu, double rr) { return family::x_of(fam, uu, rr); };
            worst = std::max(worst, rel_err(sp.t_u, oracle::fd_partial2(t_fn, u, rho, 0, fd)));
            worst = std::max(worst, rel_err(sp.t_rho, oracle::fd_partial2(t_fn, u, rho, 1, fd)));
            worst = std::max(worst, rel_err(sp.x_u, oracle::fd_partial2(x_fn, u, rho, 0, fd)));
            worst = std::max(worst, rel_err(sp.x_rho, oracle::fd_partial2(x_fn, u, rho, 1, fd)));
        }
        report.checks.push_back({"surface_partials_fd", worst < 1e-6, worst, 1e-6});
    }

    { // Q and IQ against independent quadrature and finite differences.
        double worst_q = 0.0, worst_fd = 0.0;
        oracle::FDConfig fd;
        const auto& hm = fam.hm;
        auto rho_A2 = [&hm](double r) { return hm.dp(r) / r; };
        for (double rho : numerics::log_grid(w.rho_lo, w.rho_hi, 20)) {
            double q_ref = oracle::nquad(rho_A2, 1.0, rho, 1e-11);
            double iq_ref = oracle::nquad([&hm](double r) { return hm.Q(r); }, 1.0, rho, 1e-10);
            worst_q = std::max(worst_q, std::abs(q_ref - (hm.Q(rho) - hm.Q(1.0))));
            worst_q = std::max(worst_q, std::abs(iq_ref - (hm.IQ(rho) - hm.IQ(1.0))));
            worst_fd = std::max(
                worst_fd, rel_err(oracle::fd_derivative([&hm](double r) { return hm.Q(r); }, rho, fd),
                              rho_A2(rho)));
            worst_fd = std::max(
                worst_fd,
                rel_err(oracle::fd_derivative([&hm](double r) { return hm.IQ(r); }, rho, fd),
                        hm.Q(rho)));
        }
        report.checks.push_back({"quadrature_consistency", worst_q < 1e-9, worst_q, 1e-9});
        report.checks.push_back({"model_derivative_fd", worst_fd < 1e-6, worst_fd, 1e-6});
    }

    if (fam.lambda != 0.0) { // t_of(branch_u(rho, t), rho) = t.
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            double rho = rand_rho();
            double t = t_support_edge(fam, rho) +
                       (fam.lambda > 0.0 ? 1.0 : -1.0) * (0.01 + 3.0 * unif(rng));
            for (Branch b : {Branch::plus, Branch::minus}) {
                double u = family::branch_u(fam, rho, t, b);
                worst = std::max(worst, std::abs(family::t_of(fam, u, rho) - t));
            }
        }
        report.checks.push_back({"branch_roundtrip", worst < 1e-10, worst, 1e-10});
    }

    return report;
}

} // namespace gasfold::cli
