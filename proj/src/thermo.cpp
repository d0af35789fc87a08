#include "gasfold/thermo.hpp"

#include <cmath>
#include <sstream>

#include "gasfold/errors.hpp"
#include "gasfold/oracle.hpp"

namespace gasfold::thermo {

namespace {

void check_state(double T, double rho) {
    if (!(T > 0.0) || !(rho > 0.0))
        throw DomainError("thermo: state requires T > 0 and rho > 0, got T=" +
                          std::to_string(T) + ", rho=" + std::to_string(rho));
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Antiderivative of A0^2 rho^k with zero constant; k = -1 gives the log form.
double power_antiderivative(double A0sq, double k, double rho) {
    if (k == -1.0) return A0sq * std::log(rho);
    return A0sq * std::pow(rho, k + 1.0) / (k + 1.0);
}

} // namespace

void HomentropicModel::check(double rho) const {
    if (!(rho > 0.0) || !rho_range.contains(rho))
        throw DomainError("homentropic model '" + descriptor + "': rho=" + fmt(rho) +
                          " outside declared range [" + fmt(rho_range.lo) + ", " +
                          fmt(rho_range.hi) + "]");
}

double HomentropicModel::T(double rho) const {
    check(rho);
    if (!T_of_rho)
        throw DomainError("homentropic model '" + descriptor + "' carries no temperature");
    return T_of_rho(rho);
}

double HomentropicModel::p(double rho) const {
    check(rho);
    return p_of_rho(rho);
}

double HomentropicModel::dp(double rho) const {
    check(rho);
    return dp_of_rho(rho);
}

double HomentropicModel::A(double rho) const {
    check(rho);
    double d = dp_of_rho(rho);
    if (!(d > 0.0))
        throw HyperbolicityError("homentropic model '" + descriptor +
                                     "': dp/drho <= 0 at rho=" + fmt(rho),
                                 rho);
    return A_of_rho(rho);
}

double HomentropicModel::Q(double rho) const {
    check(rho);
    return Q_of_rho(rho);
}

double HomentropicModel::IQ(double rho) const {
    check(rho);
    return IQ_of_rho(rho);
}

LagrangianState lagrangian_state(const ThermodynamicModel& model, double T, double rho) {
    check_state(T, rho);
    return {-rho * rho * T * model.phi_rho(rho, T), T * T * model.phi_T(rho, T)};
}

double entropy(const ThermodynamicModel& model, double T, double rho) {
    check_state(T, rho);
    return model.phi(rho, T) + T * model.phi_T(rho, T);
}

Applicability applicability(const ThermodynamicModel& model, double T, double rho) {
    check_state(T, rho);
    double k_TT = -(2.0 / T * model.phi_T(rho, T) + model.phi_TT(rho, T));
    double k_rr = 2.0 / rho * model.phi_rho(rho, T) + model.phi_rhorho(rho, T);
    return {k_TT, k_rr, k_TT < 0.0 && k_rr < 0.0};
}

ThermodynamicModel ideal_gas_model(const IdealGasParams& params) {
    if (!(params.n > 0.0) || !(params.R > 0.0))
        throw DomainError("ideal_gas_model: requires n > 0 and R > 0");
    const double n = params.n;
    const double R = params.R;
    ThermodynamicModel m;
    m.phi = [n, R](double rho, double T) { return 0.5 * R * n * std::log(T) - R * std::log(rho); };
    m.phi_T = [n, R](double, double T) { return 0.5 * R * n / T; };
    m.phi_rho = [R](double rho, double) { return -R / rho; };
    m.phi_TT = [n, R](double, double T) { return -0.5 * R * n / (T * T); };
    m.phi_rhorho = [R](double rho, double) { return R / (rho * rho); };
    m.R = R;
    m.entropy_offset = 0.5 * R * n; // s = R ln(T^{n/2}/rho) + Rn/2 under the zero-constant phi
    m.ideal = params;
    m.descriptor = "ideal-gas(n=" + fmt(n) + ", R=" + fmt(R) + ")";
    return m;
}

HomentropicModel power_law_model(double A0, double m, Interval rho_range) {
    if (!(A0 > 0.0))
        throw DomainError("power_law_model: requires A0 > 0");
    if (!(rho_range.lo > 0.0) || !(rho_range.hi > rho_range.lo))
        throw DomainError("power_law_model: rho range must satisfy 0 < lo < hi");
    const double A0sq = A0 * A0;
    HomentropicModel hm;
    hm.rho_range = rho_range;
    hm.kind = HomentropicModel::Kind::ClosedForm;
    hm.descriptor = "power-law(A0=" + fmt(A0) + ", m=" + fmt(m) + ")";
    hm.A_of_rho = [A0, m](double rho) { return A0 * std::pow(rho, m); };
    hm.dp_of_rho = [A0sq, m](double rho) { return A0sq * std::pow(rho, 2.0 * m + 2.0); };
    hm.p_of_rho = [A0sq, m](double rho) { return power_antiderivative(A0sq, 2.0 * m + 2.0, rho); };
    hm.Q_of_rho = [A0sq, m](double rho) { return power_antiderivative(A0sq, 2.0 * m + 1.0, rho); };
    if (m == -1.0) {
        hm.IQ_of_rho = [A0sq](double rho) { return A0sq * (rho * std::log(rho) - rho); };
    } else if (2.0 * m + 3.0 == 0.0) {
        hm.IQ_of_rho = [A0sq, m](double rho) {
            return A0sq * std::log(rho) / (2.0 * m + 2.0);
        };
    } else {
        hm.IQ_of_rho = [A0sq, m](double rho) {
            return A0sq * std::pow(rho, 2.0 * m + 3.0) / ((2.0 * m + 2.0) * (2.0 * m + 3.0));
        };
    }
    return hm;
}

namespace {

HomentropicModel ideal_gas_reduce(const IdealGasParams& params, double s0, Interval range) {
    const double n = params.n;
    const double R = params.R;
    const double E = std::exp(2.0 * s0 / (R * n));
    const double A0 = std::sqrt(R * (1.0 + 2.0 / n) * E);
    const double m = 1.0 / n - 1.0;
    HomentropicModel hm = power_law_model(A0, m, range);
    hm.s0 = s0;
    hm.T_of_rho = [E, n](double rho) { return E * std::pow(rho, 2.0 / n); };
    hm.descriptor = "ideal-gas(n=" + fmt(n) + ", R=" + fmt(R) + ", s0=" + fmt(s0) + ")";
    return hm;
}

HomentropicModel numeric_reduce(const ThermodynamicModel& model, double s0, Interval range) {
    const double s_target = s0 + model.entropy_offset;

    auto solve_T = [model, s_target](double rho) {
        auto g = [&](double T) { return entropy(model, T, rho) - s_target; };
        auto dg = [&](double T) { return 2.0 * model.phi_T(rho, T) + T * model.phi_TT(rho, T); };
        // Expand a multiplicative bracket around T = 1.
        double lo = 1.0, hi = 1.0;
        double glo = g(lo), ghi = glo;
        for (int k = 0; k < 60 && std::signbit(glo) == std::signbit(ghi); ++k) {
            lo *= 0.5;
            hi *= 2.0;
            glo = g(lo);
            ghi = g(hi);
        }
        if (std::signbit(glo) == std::signbit(ghi))
            throw ReductionError("homentropic_reduce: failed to bracket T(rho) at rho=" +
                                 fmt(rho));
        return numerics::bracketed_root(g, dg, lo, hi, 1e-12, 1e-15);
    };

    auto p_of = [model, solve_T](double rho) {
        double T = solve_T(rho);
        return -rho * rho * T * model.phi_rho(rho, T);
    };

    oracle::FDConfig fd;
    auto dp_of = [p_of, fd](double rho) { return oracle::fd_derivative(p_of, rho, fd); };

    auto A_of = [dp_of](double rho) {
        double d = dp_of(rho);
        return std::sqrt(d) / rho;
    };

    auto rhoA2 = [dp_of](double rho) { return dp_of(rho) / rho; }; // rho*A^2 = dp/rho
    const double rho_ref = 1.0;
    auto Q_of = [rhoA2, rho_ref](double rho) {
        return oracle::nquad(rhoA2, rho_ref, rho, 1e-11);
    };
    auto IQ_of = [Q_of, rho_ref](double rho) { return oracle::nquad(Q_of, rho_ref, rho, 1e-10); };

    HomentropicModel hm;
    hm.s0 = s0;
    hm.rho_range = range;
    hm.kind = HomentropicModel::Kind::Numeric;
    hm.descriptor = model.descriptor + " @ s0=" + fmt(s0) + " (numeric)";
    hm.T_of_rho = solve_T;
    hm.p_of_rho = p_of;
    hm.dp_of_rho = dp_of;
    hm.A_of_rho = A_of;
    hm.Q_of_rho = Q_of;
    hm.IQ_of_rho = IQ_of;

    // The reduction is only valid where the system stays hyperbolic.
    for (double rho : numerics::log_grid(range.lo, range.hi, 33)) {
        if (!(hm.dp_of_rho(rho) > 0.0))
            throw HyperbolicityError("homentropic_reduce: dp/drho <= 0 at rho=" + fmt(rho), rho);
    }
    return hm;
}

} // namespace

HomentropicModel homentropic_reduce(const ThermodynamicModel& model, double s0,
                                    Interval rho_range) {
    if (!(rho_range.lo > 0.0) || !(rho_range.hi > rho_range.lo))
        throw DomainError("homentropic_reduce: rho range must satisfy 0 < lo < hi");
    if (model.ideal) return ideal_gas_reduce(*model.ideal, s0, rho_range);
    return numeric_reduce(model, s0, rho_range);
}

} // namespace gasfold::thermo
