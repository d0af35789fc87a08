#include "gasfold/geometry.hpp"

#include <cmath>

#include "gasfold/errors.hpp"
#include "gasfold/numerics.hpp"

namespace gasfold::geometry {

namespace {

TwoFormOnE::Coeff zero_coeff() {
    return [](double, double) { return 0.0; };
}

} // namespace

std::array<double, 6> TwoFormOnE::coeffs(double u, double rho) const {
    return {c_tx(u, rho), c_tu(u, rho), c_trho(u, rho),
            c_xu(u, rho), c_xrho(u, rho), c_urho(u, rho)};
}

const char* to_string(TypeTag t) {
    switch (t) {
        case TypeTag::Hyperbolic: return "hyperbolic";
        case TypeTag::Elliptic: return "elliptic";
        default: return "parabolic";
    }
}

std::pair<TwoFormOnE, TwoFormOnE> euler_forms(const thermo::HomentropicModel& hm) {
    TwoFormOnE o1;
    o1.c_tx = zero_coeff();
    o1.c_tu = [](double, double rho) { return rho; };
    o1.c_trho = [](double u, double) { return u; };
    o1.c_xu = zero_coeff();
    o1.c_xrho = [](double, double) { return -1.0; };
    o1.c_urho = zero_coeff();

    TwoFormOnE o2;
    o2.c_tx = zero_coeff();
    o2.c_tu = [](double u, double) { return u; };
    o2.c_trho = [hm](double, double rho) { return hm.dp(rho) / rho; };
    o2.c_xu = [](double, double) { return -1.0; };
    o2.c_xrho = zero_coeff();
    o2.c_urho = zero_coeff();
    return {o1, o2};
}

std::pair<TwoFormOnE, TwoFormOnE> effective_forms(const thermo::HomentropicModel& hm) {
    auto [o1, o2] = euler_forms(hm);
    o1.c_tu = [hm](double, double rho) { return hm.A(rho) * rho; };
    o1.c_trho = [hm](double u, double rho) { return hm.A(rho) * u; };
    o1.c_xrho = [hm](double, double rho) { return -hm.A(rho); };
    // omega2 already carries rho*A^2 = p'/rho in its dt^drho slot.
    return {o1, o2};
}

double wedge_pair(const TwoFormOnE& alpha, const TwoFormOnE& beta, double u, double rho) {
    auto a = alpha.coeffs(u, rho);
    auto b = beta.coeffs(u, rho);
    // Index pairs (tx, tu, trho, xu, xrho, urho); complementary-pair signs
    // from the permutation parity against dt^dx^du^drho.
    return a[0] * b[5] + a[5] * b[0] - (a[1] * b[4] + a[4] * b[1]) + a[2] * b[3] + a[3] * b[2];
}

SystemType classify(const thermo::HomentropicModel& hm, double rho) {
    double det = -4.0 * hm.dp(rho);
    TypeTag tag = det < 0.0 ? TypeTag::Hyperbolic : (det > 0.0 ? TypeTag::Elliptic : TypeTag::Parabolic);
    return {tag, det};
}

CharacteristicFields characteristic_fields(const thermo::HomentropicModel& hm, double u,
                                           double rho) {
    double A = hm.A(rho);
    double c = rho * A;
    if (u == c || u == -c)
        throw SingularCharacteristic("characteristic_fields: u = +-rho*A at rho=" +
                                     std::to_string(rho));
    CharacteristicFields f;
    f.X_plus = {0.0, 0.0, A, 1.0};
    f.X_minus = {0.0, 0.0, -A, 1.0};
    f.Y_plus = {1.0 / (u - c), 1.0, 0.0, 0.0};
    f.Y_minus = {1.0 / (u + c), 1.0, 0.0, 0.0};
    return f;
}

Mat4 aw_matrix(const thermo::HomentropicModel& hm, double u, double rho) {
    double A = hm.A(rho);
    double c = rho * A;
    if (c == 0.0)
        throw SingularOperator("aw_matrix: rho*A = 0 at rho=" + std::to_string(rho));
    double s = 1.0 / c;
    Mat4 W{};
    W[0] = {s * u, -s, 0.0, 0.0};
    W[1] = {s * (u * u - c * c), -s * u, 0.0, 0.0};
    W[2] = {0.0, 0.0, 0.0, s * rho * A * A};
    W[3] = {0.0, 0.0, s * rho, 0.0};
    return W;
}

std::array<double, 4> contract(const TwoFormOnE& form, double u, double rho, const Vec4& X) {
    auto c = form.coeffs(u, rho);
    // Antisymmetric coefficient matrix in coordinate order (t, x, u, rho).
    double m[4][4] = {{0.0, c[0], c[1], c[2]},
                      {-c[0], 0.0, c[3], c[4]},
                      {-c[1], -c[3], 0.0, c[5]},
                      {-c[2], -c[4], -c[5], 0.0}};
    std::array<double, 4> out{};
    for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i) s += X[static_cast<std::size_t>(i)] * m[i][j];
        out[static_cast<std::size_t>(j)] = s;
    }
    return out;
}

Vec4 mat_vec(const Mat4& M, const Vec4& v) {
    Vec4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < 4; ++j) s += M[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

Mat4 mat_mul(const Mat4& A, const Mat4& B) {
    Mat4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) s += A[i][k] * B[k][j];
            out[i][j] = s;
        }
    return out;
}

double restrict_2form(const TwoFormOnE& form, const SurfaceParametrization& surf, double a,
                      double b) {
    double u = surf.value[2](a, b);
    double rho = surf.value[3](a, b);
    auto c = form.coeffs(u, rho);
    std::array<double, 4> da{}, db{};
    for (std::size_t i = 0; i < 4; ++i) {
        da[i] = surf.partial_a[i](a, b);
        db[i] = surf.partial_b[i](a, b);
    }
    static constexpr int pair_i[6] = {0, 0, 0, 1, 1, 2};
    static constexpr int pair_j[6] = {1, 2, 3, 2, 3, 3};
    double sum = 0.0;
    for (int k = 0; k < 6; ++k) {
        auto i = static_cast<std::size_t>(pair_i[k]);
        auto j = static_cast<std::size_t>(pair_j[k]);
        sum += c[static_cast<std::size_t>(k)] * (da[i] * db[j] - db[i] * da[j]);
    }
    return sum;
}

namespace {

// Sample grid inside the model's declared range, biased to [0.2, 5] when possible.
std::vector<double> predicate_grid(const thermo::HomentropicModel& hm, int n) {
    double lo = std::max(hm.rho_range.lo, 0.2);
    double hi = std::min(hm.rho_range.hi, 5.0);
    if (!(hi > lo)) {
        lo = hm.rho_range.lo;
        hi = hm.rho_range.hi;
    }
    return numerics::log_grid(lo, hi, n);
}

} // namespace

bool is_integrable_characteristics(const thermo::HomentropicModel& hm) {
    auto pts = predicate_grid(hm, 3);
    // Least-squares fit of p = c0 rho^3 + c1 over the three probes.
    double s_bb = 0.0, s_b = 0.0, s_pb = 0.0, s_p = 0.0;
    for (double rho : pts) {
        double b = rho * rho * rho;
        double p = hm.p(rho);
        s_bb += b * b;
        s_b += b;
        s_pb += p * b;
        s_p += p;
    }
    double n = static_cast<double>(pts.size());
    double det = s_bb * n - s_b * s_b;
    if (det == 0.0) return false;
    double c0 = (s_pb * n - s_p * s_b) / det;
    double c1 = (s_bb * s_p - s_b * s_pb) / det;
    for (double rho : predicate_grid(hm, 50)) {
        double p = hm.p(rho);
        double fit = c0 * rho * rho * rho + c1;
        if (std::abs(p - fit) > 1e-9 * std::max(1.0, std::abs(p))) return false;
    }
    return true;
}

bool is_constant_coeff_reducible(const thermo::HomentropicModel& hm) {
    auto grid = predicate_grid(hm, 50);
    for (double rho : grid) {
        if (!(hm.A_of_rho(rho) > 0.0))
            throw DomainError("is_constant_coeff_reducible: A(rho) <= 0 at rho=" +
                              std::to_string(rho));
    }
    auto g = [&hm](double rho) { return 1.0 / std::sqrt(hm.A(rho)); };
    double ra = grid.front(), rb = grid.back();
    double beta1 = (g(rb) - g(ra)) / (rb - ra);
    double beta2 = g(ra) - beta1 * ra;
    for (double rho : grid) {
        double v = g(rho);
        if (std::abs(v - (beta1 * rho + beta2)) > 1e-9 * std::max(1.0, std::abs(v))) return false;
    }
    return true;
}

} // namespace gasfold::geometry
