#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "geobohm/dynamics.hpp"
#include "geobohm/error.hpp"
#include "geobohm/matching.hpp"
#include "geobohm/metric.hpp"

using namespace geobohm;
using Catch::Approx;

namespace {

struct Setup {
    BarrierSpec s;
    BubbleParams p = derive_bubble(0.3, 1.0, 1.0);
    MatchCoefficients c = solve_coefficients(s, zeta_terms(s, p));
    TrajectoryConstants tc = trajectory_constants(c, s, p);
};

const Setup& setup() {
    static const Setup s;
    return s;
}

// d/dt of the invariant along dx/dt = v, by central differences.
double transport_rate(Region r, double x, double t, const TrajectoryConstants& tc, RegionIIModel m) {
    const double h = 1e-5;
    const double dt = (implicit_invariant(r, x, t + h, tc, m) - implicit_invariant(r, x, t - h, tc, m)) / (2 * h);
    const double dx = (implicit_invariant(r, x + h, t, tc, m) - implicit_invariant(r, x - h, t, tc, m)) / (2 * h);
    return dt + velocity(r, x, t, tc, m) * dx;
}

double max_drift(const TrajectoryResult& r) {
    double d = 0.0;
    for (const auto& q : r.samples) d = std::max(d, std::abs(q.invariant_value - r.samples[0].invariant_value));
    return d;
}

}  // namespace

TEST_CASE("wave constants reduce to the two-mode guidance law", "[dynamics]") {
    const double C1 = 0.9, C2 = 0.4, k1 = 0.8, k2 = 1.0;
    const auto w = wave_constants(C1, C2, k1, k2, 1.0, 0.2, 0.18, 0.3);
    for (double x : {-2.0, 0.5, 3.0}) {
        const double t = 0.7;
        const std::complex<double> psi = C1 * std::polar(1.0, k1 * x - 0.32 * t) + C2 * std::polar(1.0, k2 * x - 0.5 * t + 0.3);
        const std::complex<double> dpsi = std::complex<double>(0, 1) *
                                          (C1 * k1 * std::polar(1.0, k1 * x - 0.32 * t) + C2 * k2 * std::polar(1.0, k2 * x - 0.5 * t + 0.3));
        CHECK(wave_momentum(w, x, t) == Approx(std::imag(dpsi / psi)));
    }
}

TEST_CASE("integrating factor makes the guidance form exact", "[dynamics]") {
    const auto& tc = setup().tc;
    for (const WaveConstants* w : {&tc.I, &tc.III}) {
        // M dt + N dx = 0 along the flow, with M = p(1 + th4 c), N = -th1(1 + th2 c)
        auto M = [&](double x, double t) { return w->p * (1 + w->th4 * std::cos(xi(*w, x, t))); };
        auto N = [&](double x, double t) { return -w->th1 * (1 + w->th2 * std::cos(xi(*w, x, t))); };
        auto mu = [&](double x, double t) { return 1.0 / (1 + w->th9 * std::cos(xi(*w, x, t))); };
        const double h = 1e-5;
        for (double x : {-1.9, -0.4, 1.1}) {
            const double t = 0.6;
            const double dMx = (mu(x + h, t) * M(x + h, t) - mu(x - h, t) * M(x - h, t)) / (2 * h);
            const double dNt = (mu(x, t + h) * N(x, t + h) - mu(x, t - h) * N(x, t - h)) / (2 * h);
            CHECK(dMx == Approx(dNt).margin(1e-6 * (std::abs(dMx) + 1)));
        }
    }
}

TEST_CASE("phase integral differentiates back to the weighted rate", "[dynamics]") {
    const auto w = wave_constants(0.9, 0.4, 0.8, 1.0, 0.6, 0.13, 0.18, 0.0);
    const double h = 1e-5;
    for (double X : {-4.0, -0.5, 0.3, 2.9, 3.3, 7.0}) {
        const double fd = (phase_integral(w, X + h) - phase_integral(w, X - h)) / (2 * h);
        const double c = std::cos(X);
        CHECK(fd == Approx(w.p * (1 + w.th4 * c) / (1 + w.th9 * c)).epsilon(1e-7));
    }
    // continuous across odd multiples of pi
    CHECK(phase_integral(w, M_PI - 1e-9) == Approx(phase_integral(w, M_PI + 1e-9)).margin(1e-6));
}

TEST_CASE("invariants are transported by the flow", "[dynamics]") {
    const auto& tc = setup().tc;
    for (double t : {0.0, 1.3})
        for (double x : {-1.7, -0.2, 0.8}) {
            CHECK(std::abs(transport_rate(Region::I, x, t, tc, RegionIIModel::reduced)) < 1e-6);
            CHECK(std::abs(transport_rate(Region::III, x, t, tc, RegionIIModel::reduced)) < 1e-6);
            CHECK(std::abs(transport_rate(Region::II, x + t, t, tc, RegionIIModel::reduced)) < 1e-6);
            CHECK(std::abs(transport_rate(Region::II, x + t, t, tc, RegionIIModel::full)) < 1e-6);
        }
}

TEST_CASE("RK4 paths conserve the invariants with fourth-order drift", "[dynamics]") {
    const auto& tc = setup().tc;
    for (auto [r, x0, T] : {std::tuple{Region::I, -2.0, 20.0}, std::tuple{Region::III, 2.0, 20.0}, std::tuple{Region::II, 0.0, 4.0}}) {
        const auto fine = integrate_trajectory(r, x0, 0.0, T, 10000, tc);
        REQUIRE_FALSE(fine.halted);
        CHECK(fine.samples.size() == 10001);
        CHECK(max_drift(fine) < 1e-10);
        const double d1 = max_drift(integrate_trajectory(r, x0, 0.0, T, 50, tc));
        const double d2 = max_drift(integrate_trajectory(r, x0, 0.0, T, 100, tc));
        CHECK(d1 / d2 > 10.0);
    }
}

TEST_CASE("region-II momentum is the guidance slope", "[dynamics]") {
    const auto& p = setup().p;
    const auto pc = phase_constants(p.alpha0, p.alpha1);
    for (double r : {-2.0, -0.5, 0.3, 1.5}) CHECK(momentum_II(r, 0.0, p, pc) == Approx(-2.0 * shift(r, p)));
}

TEST_CASE("reduced region-II drift", "[dynamics]") {
    const double vs = 0.6;
    const auto p = derive_bubble(0.01, 1.0, vs, 0.0, -vs, 2.0);
    TrajectoryConstants tc;
    fill_region_II(tc, p);
    CHECK(tc.v0 == Approx(vs / 3.0));
    CHECK(tc.drift0 == Approx(1.0 / (vs / 3.0 - vs)));
    CHECK(velocity(Region::II, 0.0, 0.0, tc) == Approx(vs / 3.0));
    CHECK(implicit_invariant(Region::II, 0.0, 0.0, tc) == 0.0);
}

TEST_CASE("taylor coefficients follow the velocity polynomial at c = 1", "[dynamics]") {
    const auto& tc = setup().tc;
    double sp = 0, sdp = 0, sjp = 0, sjdp = 0;
    for (int j = 1; j <= 6; ++j) {
        sp += tc.iotaPrime[j];
        sdp += tc.iotaDoublePrime[j];
        sjp += j * tc.iotaPrime[j];
        sjdp += j * tc.iotaDoublePrime[j];
    }
    CHECK(tc.sigmaII[0] == Approx(-(1 + sp) / (sdp - 1)));
    // sigmaII[1] is d/dc of -N(c)/D(c) at c = 1
    CHECK(tc.sigmaII[1] == Approx(-((sdp - 1) * sjp - (1 + sp) * sjdp) / ((sdp - 1) * (sdp - 1))));
    // iota'' = iota0 iota - iota' for j <= 5, and -iota'_6
    for (int j = 1; j <= 5; ++j) CHECK(tc.iotaDoublePrime[j] == Approx(tc.iota0 * tc.iota[j] - tc.iotaPrime[j]));
    CHECK(tc.iotaDoublePrime[6] == -tc.iotaPrime[6]);
}

TEST_CASE("full region-II velocity at the centre", "[dynamics]") {
    const auto& tc = setup().tc;
    double num = 0, den = 1;
    for (int j = 1; j <= 6; ++j) {
        if (j <= 5) num += tc.iota[j];
        den += tc.iotaPrime[j];
    }
    CHECK(velocity_II_full(0.0, tc) == Approx(tc.iota0 * num / den));
    CHECK(velocity_II_full(0.7, tc) == Approx(velocity_II_full(-0.7, tc)));
}

TEST_CASE("paths stop at a node with the last good sample", "[dynamics]") {
    // the reduced drift has a pole at 2 sigma^2 d1 r^2 = -d0
    const auto& tc = setup().tc;
    const auto r = integrate_trajectory(Region::II, 0.0, 0.0, 10.0, 1000, tc);
    CHECK(r.halted);
    CHECK_FALSE(r.message.empty());
    REQUIRE_FALSE(r.samples.empty());
    CHECK(r.samples.size() < 1001);
    for (const auto& q : r.samples) CHECK(std::isfinite(q.x));
    const double rs = r.samples.back().x - r.samples.back().t;
    CHECK(tc.drift0 + 2 * 0.09 * tc.drift1 * rs * rs < 0.0);
}

TEST_CASE("singular wave constants", "[dynamics]") {
    // kappa th3' = omega th1
    const double th1 = 1.0 + 0.25, th3 = 0.8 + 0.25 * 1.0;
    try {
        wave_constants(1.0, 0.5, 0.8, 1.0, 1.0, th1, th3, 0.0);
        FAIL("expected singular_theta9");
    } catch (const ModelError& e) {
        CHECK(e.kind() == ErrorKind::singular_theta9);
    }
    CHECK_THROWS_AS(wave_constants(0.0, 0.0, 0.8, 1.0, 1.0, 0.2, 0.18, 0.0), ModelError);
}

TEST_CASE("region III with free dispersion has the unit case", "[dynamics]") {
    const auto& tc = setup().tc;
    CHECK(tc.III.unit_th12);
    CHECK(tc.III.th9 == Approx(0.0).margin(1e-12));
}

TEST_CASE("fig2 families", "[dynamics]") {
    const std::vector<double> xs = {0.0, 0.5, 1.0, 2.0, 3.7};
    const auto t = fig2_dataset(xs);
    REQUIRE(t.columns.size() == 19);
    CHECK(t.columns[0] == "x");
    CHECK(t.columns[1] == "in_4.65");
    CHECK(t.columns[18] == "tr_4.3");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i], u = 1.21 * x - 1;
        CHECK(t.rows[i][1] == u / 2 + std::atan(10 * std::tan(u)) / 10 + 4.65);
        CHECK(t.rows[i][7] == -u / 2 - std::atan(10 * std::tan(u)) / 10 - 1.75);
        CHECK(t.rows[i][11] == 0.0995 * (x - 2) + 1.75);
    }
    CHECK(fig2_rho_values(Fig2Family::incident).size() == 6);
}
