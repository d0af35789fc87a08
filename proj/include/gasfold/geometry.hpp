#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>

#include "gasfold/thermo.hpp"

namespace gasfold::geometry {

/// Components ordered (t, x, u, rho) throughout this module.
using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

/// A 2-form on the 0-jet space E(t, x, u, rho) with coefficients depending
/// on (u, rho) only. Coefficient order: dt^dx, dt^du, dt^drho, dx^du,
/// dx^drho, du^drho.
struct TwoFormOnE {
    using Coeff = std::function<double(double, double)>;
    Coeff c_tx;
    Coeff c_tu;
    Coeff c_trho;
    Coeff c_xu;
    Coeff c_xrho;
    Coeff c_urho;

    std::array<double, 6> coeffs(double u, double rho) const;
};

/// A 2-dimensional surface in E with partials of each coordinate with
/// respect to the two parameters (a, b).
struct SurfaceParametrization {
    using Func = std::function<double(double, double)>;
    std::array<Func, 4> value;     // t, x, u, rho of (a, b)
    std::array<Func, 4> partial_a;
    std::array<Func, 4> partial_b;
};

enum class TypeTag { Hyperbolic, Elliptic, Parabolic };

const char* to_string(TypeTag t);

struct SystemType {
    TypeTag tag;
    double det_P;
};

/// The pair of 2-forms associated to the system as written: omega1 without
/// the A(rho) normalization. Their pairing matrix is diag(2 rho, -2 p'/rho).
std::pair<TwoFormOnE, TwoFormOnE> euler_forms(const thermo::HomentropicModel& hm);

/// The effective pair: omega1 scaled by A(rho) so that omega1^omega2 = 0 and
/// omega1^omega1 = -omega2^omega2.
std::pair<TwoFormOnE, TwoFormOnE> effective_forms(const thermo::HomentropicModel& hm);

/// Coefficient of alpha^beta against the volume form dt^dx^du^drho.
double wedge_pair(const TwoFormOnE& alpha, const TwoFormOnE& beta, double u, double rho);

/// Type of the system at rho from the sign of det P = -4 p'(rho).
SystemType classify(const thermo::HomentropicModel& hm, double rho);

struct CharacteristicFields {
    Vec4 X_plus;
    Vec4 X_minus;
    Vec4 Y_plus;
    Vec4 Y_minus;
};

/// Generators of the two characteristic distributions.
/// Throws SingularCharacteristic when u = +-rho*A (zero characteristic speed).
CharacteristicFields characteristic_fields(const thermo::HomentropicModel& hm, double u,
                                           double rho);

/// Matrix of the operator defined by X _| omega2 = A(X) _| omega1, acting on
/// (t, x, u, rho)-ordered components. Squares to the identity where hyperbolic.
Mat4 aw_matrix(const thermo::HomentropicModel& hm, double u, double rho);

/// Interior product X _| omega as the 4 coefficients of a 1-form (dt, dx, du, drho).
std::array<double, 4> contract(const TwoFormOnE& form, double u, double rho, const Vec4& X);

Vec4 mat_vec(const Mat4& M, const Vec4& v);
Mat4 mat_mul(const Mat4& A, const Mat4& B);

/// Coefficient of da^db of the pullback of the form onto the surface at (a, b).
double restrict_2form(const TwoFormOnE& form, const SurfaceParametrization& surf, double a,
                      double b);

/// True when p(rho) fits c0 rho^3 + c1 on a sample grid (sufficient condition
/// for integrable characteristic distributions; not claimed necessary).
bool is_integrable_characteristics(const thermo::HomentropicModel& hm);

/// True when A(rho)^{-1/2} is affine in rho, i.e. A = (b1 rho + b2)^{-2}, the
/// constant-coefficient reducibility condition of the quotient equation.
bool is_constant_coeff_reducible(const thermo::HomentropicModel& hm);

} // namespace gasfold::geometry
