#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "geobohm/error.hpp"
#include "geobohm/phase.hpp"
#include "oracles/analytic.hpp"

using namespace geobohm;
using Catch::Approx;

namespace {

// slope -2b/(1 - b^2) with b written out from the profile constants
double slope_oracle(double r, const BubbleParams& p) {
    const double b = p.alpha0 / (1.0 + p.alpha1 * std::cosh(2.0 * p.sigma * r));
    return -2.0 * b / (1.0 - b * b);
}

}  // namespace

TEST_CASE("phase constants satisfy the root identities", "[phase]") {
    for (auto [a0, a1] : {std::pair{-0.9, 0.8}, {-0.5, 0.3}, {0.7, 2.0}, {-0.6, 2.0}}) {
        const auto pc = phase_constants(a0, a1);
        CHECK(std::abs(pc.mu0 * pc.mu1 - pc.beta2) < 1e-12);
        CHECK(std::abs(pc.mu0 + pc.mu1 - 2.0 * pc.beta3) < 1e-12);
        for (cd m : {pc.mu0, pc.mu1}) CHECK(std::abs(m * m - 2.0 * pc.beta3 * m + pc.beta2) < 1e-11);
    }
}

TEST_CASE("beta2 for alpha0 = 0, alpha1 = 3", "[phase]") {
    const double a0 = 0.0, a1 = 3.0;
    const double D = (a1 - 1) * (a1 - 1) - a0 * a0;
    CHECK(((a1 + 1) * (a1 + 1) - a0 * a0) / D == 4.0);
    // alpha0 = 0 makes the two roots coincide
    try {
        phase_constants(a0, a1);
        FAIL("expected degenerate_phase");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::degenerate_phase);
    }
}

TEST_CASE("degenerate phase constants are rejected", "[phase]") {
    CHECK_THROWS_AS(phase_constants(0.5, 1.5), ModelError);  // (a1 - 1)^2 = a0^2
    CHECK_THROWS_AS(phase_constants(0.2, 1.0), ModelError);
}

TEST_CASE("closed-form phase matches Simpson quadrature of the slope", "[phase]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> us(0.1, 1.0), uR(0.5, 3.0), uv(0.2, 1.2);
    int sets = 0;
    while (sets < 10) {
        BubbleParams p;
        try {
            p = derive_bubble(us(rng), uR(rng), uv(rng));
            phase_constants(p.alpha0, p.alpha1);
        } catch (const ModelError&) {
            continue;
        }
        if (std::abs(p.alpha0 / (1 + p.alpha1)) > 0.95) continue;
        ++sets;
        for (double r : {-3.0, -0.7, 0.2, 1.5, 4.0}) {
            const double ref = oracle::simpson([&](double q) { return slope_oracle(q, p); }, 0.0, r);
            CHECK(phase_II(r, 0.0, p) == Approx(ref).margin(1e-9));
        }
    }
}

TEST_CASE("phase is odd in r_s and its half-line form is even", "[phase]") {
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    const auto pc = phase_constants(p.alpha0, p.alpha1);
    CHECK(phase_II(2.0, 2.0, p) == 0.0);
    for (double r : {0.1, 0.8, 2.5}) {
        CHECK(phase_II(r, 0.0, p) == Approx(-phase_II(-r, 0.0, p)));
        CHECK(phase_II_halfline(r, p, pc) == phase_II_halfline(-r, p, pc));
        CHECK(phase_II(1.0 + r, 1.0, p) == Approx(phase_II(r, 0.0, p)));
    }
}

TEST_CASE("phase slope agrees with a central difference of the phase", "[phase]") {
    const auto p = derive_bubble(0.4, 1.5, 0.8);
    const double h = 1e-5;
    for (double r : {-2.0, -0.3, 0.4, 1.7}) {
        const double fd = (phase_II(r + h, 0.0, p) - phase_II(r - h, 0.0, p)) / (2 * h);
        CHECK(fd == Approx(phase_II_slope(r, p)).epsilon(1e-7));
    }
}

TEST_CASE("phase vanishes at rest", "[phase]") {
    auto p = derive_bubble(0.3, 1.0, 1.0);
    p.vs = 0.0;
    CHECK(phase_II(1.2, 0.0, p) == 0.0);
}

TEST_CASE("quadrature refuses to cross a pole", "[phase]") {
    const auto p = derive_bubble(0.3, 1.0, 1.0, 0.0, -3.0, 0.5);  // |vs f(0)| = 2
    try {
        phase_II_quadrature(-5.0, 5.0, p);
        FAIL("expected pole");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::pole);
    }
    CHECK_THROWS_AS(phase_II_quadrature(3.0, 4.0, p), ModelError);
    CHECK(std::isfinite(phase_II_quadrature(0.5, 1.0, p)));
}

TEST_CASE("region I phase and amplitude", "[phase]") {
    BarrierSpec s;
    const double Acal = s.A + s.B, Bcal = s.A - s.B;
    for (double x : {-3.0, -1.2}) {
        const double th = s.k1 * x - s.E1 * 0.5;
        const std::complex<double> z(Acal * std::cos(th), Bcal * std::sin(th));
        CHECK(sqrt_rho_I(x, 0.5, s, 1) == Approx(std::abs(z)));
        CHECK(std::tan(phase_I(x, 0.5, s, 1)) == Approx(std::tan(std::arg(z))));
    }
    CHECK(phase_III(2.0, 1.0, s, 2) == Approx(s.k2 * 2.0 - s.E2));
    CHECK_THROWS_AS(phase_I(0.0, 0.0, s, 3), ModelError);
}

TEST_CASE("literal imaginary convention only survives A = B", "[phase]") {
    BarrierSpec s;
    try {
        phase_I(-1.3, 0.2, s, 1, AmplitudeConvention::literal_imaginary);
        FAIL("expected branch");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::branch);
    }
    s.B = s.A;
    CHECK(phase_I(-1.3, 0.2, s, 1, AmplitudeConvention::literal_imaginary) == 0.0);
    CHECK(phase_I(-1.3, 0.2, s, 1) == 0.0);
}

TEST_CASE("superposed phase and density", "[phase]") {
    const std::vector<Component> cs = {{1.0, 1.0, 0.3}, {0.5, 2.0, 1.1}};
    const auto out = superposed_phase_density(cs);
    const std::complex<double> psi = std::polar(1.0, 0.3) + std::polar(1.0, 1.1);
    CHECK(out.phase_defined);
    CHECK(out.S == Approx(std::arg(psi)));
    CHECK(out.sqrt_rho == Approx(std::abs(psi)));

    const auto node = superposed_phase_density({{1.0, 1.0, 0.0}, {1.0, 1.0, M_PI}});
    CHECK_FALSE(node.phase_defined);
    CHECK(std::isnan(node.S));
}
