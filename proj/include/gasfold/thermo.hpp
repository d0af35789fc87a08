#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gasfold/numerics.hpp"

namespace gasfold::thermo {

using Evaluator1 = std::function<double(double)>;         // of rho
using Evaluator2 = std::function<double(double, double)>; // of (rho, T)

struct IdealGasParams {
    double n = 3.0;  // degrees of freedom
    double R = 1.0;  // gas constant
    double s0 = 0.0; // specific entropy constant
};

/// An equilibrium gas described by its Massieu-Planck potential phi(rho, T).
/// All evaluators are pure; the model is immutable after construction.
struct ThermodynamicModel {
    Evaluator2 phi;
    Evaluator2 phi_T;
    Evaluator2 phi_rho;
    Evaluator2 phi_TT;
    Evaluator2 phi_rhorho;
    double R = 1.0;
    std::string descriptor;
    /// phi carries a zero additive constant, so the entropy s = phi + T*phi_T
    /// may exceed the conventional labeling by a constant; reductions solve
    /// s = s0 + entropy_offset so that s0 keeps its conventional meaning.
    double entropy_offset = 0.0;
    /// Set when the model admits the ideal-gas closed forms.
    std::optional<IdealGasParams> ideal;
};

struct LagrangianState {
    double p;
    double e;
};

struct Applicability {
    double kappa_TT;
    double kappa_rhorho;
    bool applicable;
};

/// The reduced state at a fixed entropy level: every thermodynamic quantity
/// as a function of rho alone. T_of_rho may be absent (direct power laws).
struct HomentropicModel {
    enum class Kind { ClosedForm, Numeric };

    double s0 = 0.0;
    Interval rho_range;
    Kind kind = Kind::ClosedForm;
    std::string descriptor;
    Evaluator1 T_of_rho; // may be empty
    Evaluator1 p_of_rho;
    Evaluator1 dp_of_rho;
    Evaluator1 A_of_rho;
    Evaluator1 Q_of_rho;
    Evaluator1 IQ_of_rho;

    bool has_temperature() const { return static_cast<bool>(T_of_rho); }

    // Domain-checked access.
    double T(double rho) const;
    double p(double rho) const;
    double dp(double rho) const;
    double A(double rho) const; // throws HyperbolicityError where dp <= 0
    double Q(double rho) const;
    double IQ(double rho) const;

private:
    void check(double rho) const;
};

/// p = -rho^2*T*phi_rho, e = T^2*phi_T.
LagrangianState lagrangian_state(const ThermodynamicModel& model, double T, double rho);

/// s = phi + T*phi_T.
double entropy(const ThermodynamicModel& model, double T, double rho);

/// Coefficients of the state quadratic form restricted to the Lagrangian
/// manifold; the model is physically applicable where both are negative
/// (equivalently e_T > 0 and p_rho > 0).
Applicability applicability(const ThermodynamicModel& model, double T, double rho);

/// phi = (R*n/2) ln T - R ln rho.
ThermodynamicModel ideal_gas_model(const IdealGasParams& params);

/// Collapse the model onto the entropy level s0. Ideal-gas models use the
/// closed forms T = exp(2*s0/(R*n)) rho^(2/n), A = A0 rho^m directly; other
/// models are reduced numerically (Newton on s - s0, anchored quadratures
/// for Q and IQ).
HomentropicModel homentropic_reduce(const ThermodynamicModel& model, double s0,
                                    Interval rho_range = {});

/// Direct power-law sound-speed profile A(rho) = A0 rho^m with the natural
/// zero-constant antiderivatives for p, Q and IQ. Carries no temperature.
HomentropicModel power_law_model(double A0, double m, Interval rho_range = {});

} // namespace gasfold::thermo
