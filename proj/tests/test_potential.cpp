#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "geobohm/error.hpp"
#include "geobohm/metric.hpp"
#include "geobohm/potential.hpp"
#include "oracles/analytic.hpp"

using namespace geobohm;
using Catch::Approx;

TEST_CASE("region-II quantum potential in closed form", "[potential]") {
    for (double b : {-0.8, -0.2, 0.0, 0.5, 0.95}) CHECK(quantum_potential_II_of_shift(b) == Approx(std::atanh(b) + 0.5 * b * b).margin(1e-15));
    try {
        quantum_potential_II_of_shift(1.0);
        FAIL("expected pole");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::pole);
    }
}

TEST_CASE("dQ/df matches its integrand", "[potential]") {
    for (auto p : {derive_bubble(0.3, 1.0, 1.0), derive_bubble(0.8, 2.0, 0.6), derive_bubble(0.3, 1.0, 1.0, 0.0, -1.0, 0.05)}) {
        for (double x = -4.0; x <= 4.0; x += 0.25) {
            if (std::abs(shift(x, p)) > 0.9) continue;
            CHECK(dQ_consistency(x, p) < 1e-6);
        }
    }
}

TEST_CASE("Bohm potential of a Gaussian density", "[potential]") {
    // rho = exp(-x^2): Q = -(x^2 - 1)/2
    const int n = 401;
    const double dx = 0.01;
    std::vector<double> rho(n), ref(n);
    for (int i = 0; i < n; ++i) {
        const double x = -2.0 + i * dx;
        rho[i] = std::exp(-x * x);
        ref[i] = -0.5 * (x * x - 1.0);
    }
    const auto q = bohm_potential_generic(rho, dx);
    for (int i = 0; i < n; ++i) CHECK(q[i] == Approx(ref[i]).margin(i == 0 || i == n - 1 ? 1e-3 : 1e-4));
    CHECK_THROWS_AS(bohm_potential_generic({1.0, 1.0}, dx), ModelError);
    CHECK_THROWS_AS(bohm_potential_generic({1.0, 0.0, 1.0}, dx), ModelError);
}

TEST_CASE("regime classification", "[potential]") {
    CHECK(classify_regime(0.5, 1.0).regime == Regime::narrow);
    CHECK(classify_regime(1.0, 1.0).regime == Regime::narrow);
    CHECK(classify_regime(1.5, 1.0).regime == Regime::intermediate);
    CHECK(classify_regime(2.5, 1.0).regime == Regime::wide);
}

TEST_CASE("distortion energy against Simpson and the asymptotic laws", "[potential]") {
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    const double a = 1.7;
    const double ref = oracle::simpson([&](double x) { return 0.5 * std::pow(shift(x - 0.2, p), 2); }, -a / 2, a / 2);
    CHECK(distortion_energy(a, p, 0.2) == Approx(ref).epsilon(1e-10));

    const auto pn = derive_bubble(1e-3, 1.0, 1.0);
    const double Rn = bubble_radius(pn.sigma, pn.alpha1);
    const double narrow = distortion_energy(Rn / 2, pn, 0.0) / energy_narrow(Rn / 2, pn.vs);
    CHECK(narrow == Approx(0.97961).margin(1e-4));

    for (double s : {1e-2, 1e-3, 1e-4}) {
        const auto pw = derive_bubble(s, 1.0, 1.0);
        const double a = 10 * bubble_radius(s, pw.alpha1);
        CHECK(distortion_energy(a, pw, 0.0) / energy_wide(pw.vs, s) == Approx(1.0 / 6.0).margin(1e-3));
    }
}

TEST_CASE("profile approximations near and far from the centre", "[potential]") {
    const auto p = derive_bubble(1e-2, 1.0, 1.0);
    const double R = bubble_radius(p.sigma, p.alpha1);
    const double f0 = bubble_profile(0.0, p);
    const auto atR = f_approximations(R, p);
    CHECK(atR.inner == Approx(0.5 * f0));
    CHECK(std::abs(atR.exact - atR.inner) / std::abs(atR.exact) < 0.25);
    const auto far = f_approximations(3 * R, p);
    CHECK(far.outer == Approx(far.exact).epsilon(0.05));
    CHECK(f_approximations(-3 * R, p).outer == Approx(far.outer));
    const auto centre = f_approximations(0.0, p);
    CHECK(centre.inner == Approx(centre.exact));
}

TEST_CASE("regional potential from g00", "[potential]") {
    CHECK(quantum_potential_region(-std::cbrt(9.0 * 4.0), 1) == Approx(2.0));
    CHECK(quantum_potential_region(-1.0, -1) == Approx(-1.0 / 3.0));
    CHECK_THROWS_AS(quantum_potential_region(0.5, 1), ModelError);
}
