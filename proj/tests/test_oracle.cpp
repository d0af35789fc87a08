#include <doctest.h>

#include <cmath>

#include "gasfold/errors.hpp"
#include "gasfold/numerics.hpp"
#include "gasfold/oracle.hpp"
#include "support.hpp"

using namespace gasfold;

TEST_CASE("fd_partial: polynomial") {
    auto f = [](double u, double rho) { return u * u * rho; };
    CHECK(std::abs(oracle::fd_partial2(f, 2.0, 3.0, 0) - 12.0) < 1e-8);
    CHECK(std::abs(oracle::fd_partial2(f, 2.0, 3.0, 1) - 4.0) < 1e-8);
}

TEST_CASE("fd_partial: constant is zero") {
    auto f = [](const std::vector<double>&) { return 7.0; };
    CHECK(oracle::fd_partial(f, {0.3, 1.2}, 0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fd_partial: t_u of the quadrature equals lambda*u + alpha0") {
    auto fam = testing::pstar_family();
    auto t_fn = [&fam](double u, double rho) { return family::t_of(fam, u, rho); };
    CHECK(std::abs(oracle::fd_partial2(t_fn, 0.0, 1.0, 0) - 1.0) < 1e-8);
}

TEST_CASE("fd_partial: non-finite evaluation raises") {
    auto f = [](const std::vector<double>& p) { return std::log(p[0]); };
    CHECK_THROWS_AS(oracle::fd_partial(f, {0.0}, 0), OracleError);
}

TEST_CASE("nquad: closed-form antiderivative of rho^(-1/3)") {
    double got = oracle::nquad([](double r) { return std::pow(r, -1.0 / 3.0); }, 1.0, 2.0, 1e-12);
    double want = 1.5 * (std::pow(2.0, 2.0 / 3.0) - 1.0);
    CHECK(std::abs(got - want) < 1e-11);
    // matches Q(2) - Q(1) for A0 = 1, m = -2/3
    auto hm = thermo::power_law_model(1.0, -2.0 / 3.0, {1e-6, 50.0});
    CHECK(std::abs(got - (hm.Q(2.0) - hm.Q(1.0))) < 1e-11);
}

TEST_CASE("nquad: empty interval") {
    CHECK(oracle::nquad([](double) { return 111.0; }, 3.0, 3.0, 1e-10) == 0.0);
}

TEST_CASE("nquad: integral of Q matches IQ differences") {
    auto hm = thermo::power_law_model(1.0, -2.0 / 3.0, {1e-6, 50.0});
    double got = oracle::nquad([&hm](double r) { return hm.Q(r); }, 1.0, 2.0, 1e-11);
    CHECK(std::abs(got - (hm.IQ(2.0) - hm.IQ(1.0))) < 1e-9);
}

TEST_CASE("nquad: oscillatory integrand still converges") {
    double got = oracle::nquad([](double x) { return std::sin(10.0 * x); }, 0.0, 3.141592653589793,
                               1e-12);
    CHECK(std::abs(got) < 1e-10); // (1 - cos(10 pi))/10 = 0
}

TEST_CASE("fold_scan: points land on the parametric caustic") {
    auto fam = testing::pstar_family();
    auto u_grid = numerics::linear_grid(-6.0, 4.0, 200);
    auto rho_grid = numerics::log_grid(0.8, 3.0, 40);
    auto hits = oracle::fold_scan(fam, u_grid, rho_grid);
    CHECK(hits.size() >= rho_grid.size()); // at least one root per line here
    for (auto [u, rho] : hits) CHECK(std::abs(family::fold_indicator(fam, u, rho)) < 1e-6);
}

TEST_CASE("fold_scan: lambda = 0 with alpha2 = 0 leaves no zeros") {
    family::SolutionFamily fam;
    fam.lambda = 0.0;
    fam.alpha0 = 1.0;
    fam.alpha2 = 0.0;
    fam.hm = thermo::power_law_model(1.0, -2.0 / 3.0, {1e-6, 50.0});
    // indicator = alpha0 * x_rho = -alpha0^2 rho A^2 < 0 everywhere
    auto hits = oracle::fold_scan(fam, numerics::linear_grid(-2.0, 2.0, 50),
                                  numerics::log_grid(0.5, 2.0, 10));
    CHECK(hits.empty());
}

TEST_CASE("mass_integral: constant density") {
    std::vector<family::ProfileSample> prof;
    for (int i = 0; i <= 10; ++i)
        prof.push_back({0.5 * i, 2.0, 0.0, family::Branch::plus, 0.0});
    CHECK(oracle::mass_integral(prof, {1.0, 4.0}) == doctest::Approx(6.0));
}

TEST_CASE("mass_integral: jump is allowed, fold is not") {
    std::vector<family::ProfileSample> with_jump{
        {0.0, 1.0, 0.0, family::Branch::plus, 0.0},
        {1.0, 1.0, 0.0, family::Branch::plus, 0.0},
        {1.0, 3.0, 0.0, family::Branch::plus, 0.0}, // jump at x = 1
        {2.0, 3.0, 0.0, family::Branch::plus, 0.0},
    };
    CHECK(oracle::mass_integral(with_jump, {0.0, 2.0}) == doctest::Approx(4.0));

    std::vector<family::ProfileSample> folded{
        {0.0, 1.0, 0.0, family::Branch::plus, 0.0},
        {2.0, 2.0, 0.0, family::Branch::plus, 0.0},
        {1.0, 3.0, 0.0, family::Branch::plus, 0.0}, // direction reverses
    };
    CHECK_THROWS_AS(oracle::mass_integral(folded, {0.0, 2.0}), OracleError);
}

TEST_CASE("mass_integral: trapezoid error falls with the grid") {
    // rho(x) = sin(x) + 2 on [0, 3]
    auto make = [](int n) {
        std::vector<family::ProfileSample> prof;
        for (int i = 0; i <= n; ++i) {
            double x = 3.0 * i / n;
            prof.push_back({x, std::sin(x) + 2.0, 0.0, family::Branch::plus, 0.0});
        }
        return prof;
    };
    double exact = (std::cos(0.0) - std::cos(3.0)) + 6.0;
    double e1 = std::abs(oracle::mass_integral(make(100), {0.0, 3.0}) - exact);
    double e2 = std::abs(oracle::mass_integral(make(200), {0.0, 3.0}) - exact);
    CHECK(e2 < e1 / 3.2); // ~O(h^2)
}

TEST_CASE("r2 sequence stays inside the unit square and fills it") {
    double xmin = 1, xmax = 0, ymin = 1, ymax = 0;
    for (int k = 0; k < 2000; ++k) {
        auto p = numerics::r2_point(static_cast<std::uint64_t>(k));
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    CHECK(xmin >= 0.0);
    CHECK(xmax <= 1.0);
    CHECK(xmax - xmin > 0.9);
    CHECK(ymax - ymin > 0.9);
}
