#include "gasfold/family.hpp"

#include <algorithm>
#include <cmath>

#include "gasfold/errors.hpp"

namespace gasfold::family {

const char* to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

double wave_residual(const ScalarField2& f, double u, double rho,
                     const thermo::HomentropicModel& hm) {
    double A = hm.A(rho);
    return f.d_uu(u, rho) - f.d_rhorho(u, rho) / (A * A);
}

double t_of(const SolutionFamily& fam, double u, double rho) {
    const auto& hm = fam.hm;
    return 0.5 * fam.lambda * u * u + fam.alpha0 * u + fam.alpha2 / rho +
           fam.lambda / rho * hm.IQ(rho) + fam.t0;
}

double x_of(const SolutionFamily& fam, double u, double rho) {
    const auto& hm = fam.hm;
    double Q = hm.Q(rho);
    double IQ = hm.IQ(rho);
    return fam.lambda * u * u * u / 3.0 - fam.lambda * u * Q + 0.5 * fam.alpha0 * u * u +
           fam.lambda * u / rho * IQ + fam.alpha2 * u / rho - fam.alpha0 * Q + fam.x0;
}

double radicand(const SolutionFamily& fam, double rho, double t) {
    return rho * fam.lambda * (t - fam.t0) + 0.5 * rho * fam.alpha0 * fam.alpha0 -
           fam.lambda * fam.alpha2 - fam.lambda * fam.lambda * fam.hm.IQ(rho);
}

double branch_u(const SolutionFamily& fam, double rho, double t, Branch sign) {
    if (fam.lambda == 0.0)
        throw DegenerateFamily("branch_u: branch resolution requires lambda != 0");
    double D = radicand(fam, rho, t);
    if (D < 0.0)
        throw OutsideSupport("branch_u: negative radicand at rho=" + std::to_string(rho) +
                                 ", t=" + std::to_string(t),
                             D);
    double root = std::sqrt(2.0 * rho * D) / (fam.lambda * rho);
    return -fam.alpha0 / fam.lambda + (sign == Branch::plus ? root : -root);
}

SurfacePartials surface_partials(const SolutionFamily& fam, double u, double rho) {
    const auto& hm = fam.hm;
    double A = hm.A(rho);
    double Q = hm.Q(rho);
    double IQ = hm.IQ(rho);
    double rho2 = rho * rho;
    double rhoA2 = rho * A * A;
    SurfacePartials s;
    s.t_u = fam.lambda * u + fam.alpha0;
    s.t_rho = -fam.alpha2 / rho2 - fam.lambda * IQ / rho2 + fam.lambda * Q / rho;
    s.x_u = fam.lambda * u * u - fam.lambda * Q + fam.alpha0 * u + fam.lambda * IQ / rho +
            fam.alpha2 / rho;
    s.x_rho = -fam.lambda * u * rhoA2 + fam.lambda * u * Q / rho - fam.lambda * u * IQ / rho2 -
              fam.alpha2 * u / rho2 - fam.alpha0 * rhoA2;
    return s;
}

double fold_indicator(const SolutionFamily& fam, double u, double rho) {
    auto s = surface_partials(fam, u, rho);
    return s.t_u * s.x_rho - s.t_rho * s.x_u;
}

geometry::SurfaceParametrization solution_surface(const SolutionFamily& fam) {
    geometry::SurfaceParametrization surf;
    surf.value[0] = [fam](double u, double rho) { return t_of(fam, u, rho); };
    surf.value[1] = [fam](double u, double rho) { return x_of(fam, u, rho); };
    surf.value[2] = [](double u, double) { return u; };
    surf.value[3] = [](double, double rho) { return rho; };
    surf.partial_a[0] = [fam](double u, double rho) { return surface_partials(fam, u, rho).t_u; };
    surf.partial_a[1] = [fam](double u, double rho) { return surface_partials(fam, u, rho).x_u; };
    surf.partial_a[2] = [](double, double) { return 1.0; };
    surf.partial_a[3] = [](double, double) { return 0.0; };
    surf.partial_b[0] = [fam](double u, double rho) { return surface_partials(fam, u, rho).t_rho; };
    surf.partial_b[1] = [fam](double u, double rho) { return surface_partials(fam, u, rho).x_rho; };
    surf.partial_b[2] = [](double, double) { return 0.0; };
    surf.partial_b[3] = [](double, double) { return 1.0; };
    return surf;
}

VarkappaCoeffs varkappa_coeffs(const SolutionFamily& fam, double u, double rho) {
    const auto& hm = fam.hm;
    double A = hm.A(rho);
    double Q = hm.Q(rho);
    double IQ = hm.IQ(rho);
    VarkappaCoeffs k;
    k.du_coeff = -(fam.lambda * u * u + fam.alpha0 * u - fam.lambda * Q +
                   fam.lambda / rho * IQ + fam.alpha2 / rho);
    k.drho_coeff = fam.lambda * u / (rho * rho) * IQ - fam.lambda * u / rho * Q +
                   rho * A * A * (fam.lambda * u + fam.alpha0) +
                   fam.alpha2 * u / (rho * rho);
    return k;
}

namespace {

std::vector<ProfileSample> branch_samples(const SolutionFamily& fam, double t,
                                          const std::vector<double>& rho_grid, Branch sign) {
    std::vector<ProfileSample> out;
    out.reserve(rho_grid.size());
    for (double rho : rho_grid) {
        if (radicand(fam, rho, t) < 0.0) continue;
        double u = branch_u(fam, rho, t, sign);
        out.push_back({x_of(fam, u, rho), rho, u, sign, t});
    }
    return out;
}

void dedup(std::vector<ProfileSample>& v) {
    auto last = std::unique(v.begin(), v.end(), [](const ProfileSample& a, const ProfileSample& b) {
        return std::abs(a.x - b.x) <= 1e-12 && std::abs(a.rho - b.rho) <= 1e-12;
    });
    v.erase(last, v.end());
}

} // namespace

std::vector<ProfileSample> profile(const SolutionFamily& fam, double t,
                                   const std::vector<double>& rho_grid) {
    std::vector<ProfileSample> out;
    for (Branch b : {Branch::plus, Branch::minus}) {
        auto part = branch_samples(fam, t, rho_grid, b);
        std::sort(part.begin(), part.end(),
                  [](const ProfileSample& a, const ProfileSample& c) { return a.x < c.x; });
        dedup(part);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<ProfileSample> path_profile(const SolutionFamily& fam, double t,
                                        const std::vector<double>& rho_grid) {
    std::vector<double> grid = rho_grid;
    std::sort(grid.begin(), grid.end());
    auto minus = branch_samples(fam, t, grid, Branch::minus); // ascending rho
    auto plus = branch_samples(fam, t, grid, Branch::plus);
    std::reverse(plus.begin(), plus.end()); // descending rho
    minus.insert(minus.end(), plus.begin(), plus.end());
    dedup(minus);
    return minus;
}

int fold_count(const std::vector<ProfileSample>& path) {
    int reversals = 0;
    int dir = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        double dx = path[i].x - path[i - 1].x;
        if (dx == 0.0) continue;
        int d = dx > 0.0 ? 1 : -1;
        if (dir != 0 && d != dir) ++reversals;
        dir = d;
    }
    return reversals / 2;
}

int preimage_count(const std::vector<ProfileSample>& path, double probe) {
    int count = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        double a = path[i - 1].x;
        double b = path[i].x;
        if ((a < probe && probe <= b) || (b <= probe && probe < a)) ++count;
    }
    return count;
}

} // namespace gasfold::family
