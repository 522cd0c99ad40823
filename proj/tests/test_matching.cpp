#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>

#include "geobohm/error.hpp"
#include "geobohm/matching.hpp"

using namespace geobohm;
using Catch::Approx;

namespace {

// Continuity of psi and psi' at both walls as a dense 4x4 system in
// [cI1, cI2, cII1, cIII2], with cII2 = 1 - cII1 and cIII1 fixed.
Eigen::Vector4cd dense_solve(const ZetaTerms& z, const BarrierSpec& s, cd cIII1) {
    const auto& Z = z.zeta;
    const auto& P = z.zetaPrime;
    const cd u0 = std::polar(1.0, s.deltaE() * z.t_left);
    const cd uR = std::polar(1.0, s.deltaE() * z.t_right);
    Eigen::Matrix4cd M;
    M << Z[1], Z[2], -Z[3] * (1.0 - u0), 0.0,
         P[1], P[2], -P[3] * (1.0 - u0), 0.0,
         0.0, 0.0, -Z[4] * (1.0 - uR), Z[6],
         0.0, 0.0, -P[4] * (1.0 - uR), P[6];
    Eigen::Vector4cd b;
    b << Z[3] * u0, P[3] * u0, Z[4] * uR - Z[5] * cIII1, P[4] * uR - P[5] * cIII1;
    return M.fullPivLu().solve(b);
}

std::vector<BarrierSpec> fixtures() {
    std::vector<BarrierSpec> out(4);
    out[1].t1 = 3.5;
    out[2].A = 0.7;
    out[2].B = 1.3;
    out[2].a = 1.2;
    out[3].k1 = 0.5;
    out[3].k2 = 1.1;
    out[3].E1 = 0.125;
    out[3].E2 = 0.605;
    out[3].V0 = 2.0;
    out[3].t0 = 0.4;
    out[3].t1 = 2.9;
    return out;
}

}  // namespace

TEST_CASE("closed-form coefficients agree with a dense solve", "[matching]") {
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    for (const auto& s : fixtures()) {
        for (cd c3 : {cd(1.0), cd(0.3, -0.8)}) {
            const auto z = zeta_terms(s, p);
            const auto c = solve_coefficients(s, z, c3);
            const Eigen::Vector4cd x = dense_solve(z, s, c3);
            CHECK(std::abs(x[0] - c.cI1) < 1e-10 * std::max(1.0, std::abs(c.cI1)));
            CHECK(std::abs(x[1] - c.cI2) < 1e-10 * std::max(1.0, std::abs(c.cI2)));
            CHECK(std::abs(x[2] - c.cII1) < 1e-10 * std::max(1.0, std::abs(c.cII1)));
            CHECK(std::abs(x[3] - c.cIII2) < 1e-10 * std::max(1.0, std::abs(c.cIII2)));
            for (double r : matching_residuals(c, s)) CHECK(r < 1e-10);
        }
    }
}

TEST_CASE("structural identities of the solution", "[matching]") {
    const BarrierSpec s;
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    const auto c = solve_coefficients(s, zeta_terms(s, p));
    CHECK(std::abs(c.cII1 + c.cII2 - 1.0) < 1e-14);
    CHECK(std::abs(c.cIII2 - c.varpi[1] * c.cIII1) < 1e-14);
    CHECK(c.t_left == s.t0);
    CHECK(c.t_right == s.t1);
}

TEST_CASE("wavefunction is continuous across the walls at the matching times", "[matching]") {
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    for (const auto& s : fixtures()) {
        const auto c = solve_coefficients(s, zeta_terms(s, p));
        const double e = 1e-8;
        const double L = -0.5 * s.a, R = 0.5 * s.a;
        const cd l0 = wavefunction(L - e, c.t_left, c, s, p), l1 = wavefunction(L + e, c.t_left, c, s, p);
        const cd r0 = wavefunction(R - e, c.t_right, c, s, p), r1 = wavefunction(R + e, c.t_right, c, s, p);
        CHECK(std::abs(l0 - l1) < 1e-6 * std::max(1.0, std::abs(l0)));
        CHECK(std::abs(r0 - r1) < 1e-6 * std::max(1.0, std::abs(r0)));
        // derivative continuity from one-sided differences
        const double h = 1e-5;
        const cd dl0 = (wavefunction(L - e, c.t_left, c, s, p) - wavefunction(L - e - h, c.t_left, c, s, p)) / h;
        const cd dl1 = (wavefunction(L + e + h, c.t_left, c, s, p) - wavefunction(L + e, c.t_left, c, s, p)) / h;
        CHECK(std::abs(dl0 - dl1) < 1e-3 * std::max(1.0, std::abs(dl0)));
    }
}

TEST_CASE("resonant right boundary is reported", "[matching]") {
    const BarrierSpec s;  // t0 = 0
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    const auto z = zeta_terms(s, p, RightBoundaryTime::t0);
    try {
        solve_coefficients(s, z);
        FAIL("expected resonant");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::resonant);
    }
    BarrierSpec shifted = s;
    shifted.t0 = 0.9;
    const auto c = solve_coefficients(shifted, zeta_terms(shifted, p, RightBoundaryTime::t0));
    for (double r : matching_residuals(c, shifted)) CHECK(r < 1e-10);
}

TEST_CASE("invalid barriers are rejected", "[matching]") {
    BarrierSpec s;
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    s.V0 = 0.4;
    CHECK_THROWS_AS(zeta_terms(s, p), ModelError);
    s = BarrierSpec{};
    s.a = 0.0;
    CHECK_THROWS_AS(zeta_terms(s, p), ModelError);
}

TEST_CASE("transmission forms", "[matching]") {
    const BarrierSpec s;
    const auto p = derive_bubble(0.3, 1.0, 1.0);
    const auto c = solve_coefficients(s, zeta_terms(s, p));
    for (double Xi : {0.0, 0.7, 2.0}) {
        const auto a = transmission_from(c, Xi);
        const auto b = transmission(c.cIII1, c.varpi[1] * std::polar(1.0, -s.deltaE() * s.t1), s.deltaE(), s.t1, Xi);
        CHECK(a.modulus == Approx(b.modulus));
        CHECK(a.modulus == Approx(std::abs(a.T)));
    }
}
