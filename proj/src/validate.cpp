#include "geobohm/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "geobohm/cli.hpp"
#include "geobohm/dynamics.hpp"
#include "geobohm/error.hpp"
#include "geobohm/hartman.hpp"
#include "geobohm/kernels.hpp"
#include "geobohm/matching.hpp"
#include "geobohm/metric.hpp"
#include "geobohm/phase.hpp"
#include "geobohm/potential.hpp"

namespace geobohm {

namespace {

constexpr double kPhaseTol = 1e-6;
constexpr double kPotentialTol = 1e-6;
constexpr double kPotentialShiftCap = 0.9;
constexpr double kMatchTol = 1e-10;
constexpr double kDriftWaveTol = 1e-6;
constexpr double kDriftIITol = 1e-5;
constexpr double kHalvingGain = 10.0;
constexpr double kTimeLawTol = 1e-12;
constexpr double kSlopeTol = 0.01;
constexpr double kPlateauCvTol = 1e-12;
constexpr double kNarrowLo = 0.95, kNarrowHi = 1.05;
constexpr double kWideTarget = 1.0 / 6.0;
constexpr double kWideTol = 1e-3;
constexpr double kIdentityTol = 1e-12;
constexpr double kGeodesicTol = 1e-8;
constexpr double kFig2Tol = 1e-12;

std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

CheckResult fail_with(const std::string& name, const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
}

BubbleParams random_bubble(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> us(0.1, 1.0), uR(0.5, 3.0), uv(0.2, 1.5);
    for (;;) {
        try {
            BubbleParams p = derive_bubble(us(rng), uR(rng), uv(rng));
            if (std::abs(shift(0.0, p)) >= 0.95) continue;
            phase_constants(p.alpha0, p.alpha1);
            return p;
        } catch (const ModelError&) {
        }
    }
}

CheckResult check_phase(std::mt19937_64& rng) {
    const std::string name = "phase oracle";
    try {
        double worst = 0.0;
        for (int set = 0; set < 20; ++set) {
            const BubbleParams p = random_bubble(rng);
            const double span = 4.0 * bubble_radius(p.sigma, p.alpha1);
            const auto rows = parallel::phase_grid(linspace(-span, span, 200), p, 1e-12);
            for (const auto& r : rows) worst = std::max(worst, r.abs_err);
        }
        return {name, worst <= kPhaseTol, "max |dS - quad| = " + sci(worst)};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

CheckResult check_potential(const RunConfig& cfg, std::mt19937_64& rng) {
    const std::string name = "potential consistency";
    try {
        std::vector<BubbleParams> bubbles{cfg.bubble, derive_bubble(0.3, 1.0, 1.0, 0.0, -1.0, 0.05)};
        for (int i = 0; i < 8; ++i) bubbles.push_back(random_bubble(rng));
        double worst = 0.0;
        int used = 0;
        for (const auto& p : bubbles) {
            const double span = 4.0 * bubble_radius(p.sigma, p.alpha1);
            for (double x : linspace(-span, span, 401)) {
                if (std::abs(shift(x, p)) > kPotentialShiftCap) continue;
                worst = std::max(worst, dQ_consistency(x, p));
                ++used;
            }
        }
        return {name, worst <= kPotentialTol, "max |dQ/df - integrand| = " + sci(worst) + " over " +
                                                  std::to_string(used) + " points"};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

// Gaussian elimination with partial pivoting on a dense complex system.
std::vector<cd> solve_dense(std::vector<std::vector<cd>> m, std::vector<cd> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const cd f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<cd> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cd s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= m[i][k] * x[k];
        x[i] = s / m[i][i];
    }
    return x;
}

std::vector<BarrierSpec> matching_fixtures(const RunConfig& cfg) {
    std::vector<BarrierSpec> out{cfg.barrier};
    BarrierSpec s;
    s.t1 = 3.5;
    out.push_back(s);
    s = BarrierSpec{};
    s.A = 0.7;
    s.B = 1.3;
    s.a = 1.2;
    out.push_back(s);
    s = BarrierSpec{};
    s.k1 = 0.5;
    s.k2 = 1.1;
    s.E1 = 0.125;
    s.E2 = 0.605;
    s.V0 = 2.0;
    s.t0 = 0.4;
    s.t1 = 2.9;
    out.push_back(s);
    return out;
}

CheckResult check_matching(const RunConfig& cfg) {
    const std::string name = "matching residuals";
    try {
        double res = 0.0, diff = 0.0;
        for (const auto& spec : matching_fixtures(cfg)) {
            const ZetaTerms z = zeta_terms(spec, cfg.bubble);
            const MatchCoefficients c = solve_coefficients(spec, z);
            for (double r : matching_residuals(c, spec)) res = std::max(res, r);

            const auto& Z = z.zeta;
            const auto& P = z.zetaPrime;
            const cd u0 = std::polar(1.0, spec.deltaE() * z.t_left);
            const cd uR = std::polar(1.0, spec.deltaE() * z.t_right);
            const cd c3 = c.cIII1;
            std::vector<std::vector<cd>> m = {
                {Z[1], Z[2], -Z[3] * (1.0 - u0), 0.0},
                {P[1], P[2], -P[3] * (1.0 - u0), 0.0},
                {0.0, 0.0, -Z[4] * (1.0 - uR), Z[6]},
                {0.0, 0.0, -P[4] * (1.0 - uR), P[6]},
            };
            std::vector<cd> rhs = {Z[3] * u0, P[3] * u0, Z[4] * uR - Z[5] * c3, P[4] * uR - P[5] * c3};
            const auto x = solve_dense(m, rhs);
            const cd ref[4] = {c.cI1, c.cI2, c.cII1, c.cIII2};
            for (int i = 0; i < 4; ++i) diff = std::max(diff, std::abs(x[i] - ref[i]) / std::max(1.0, std::abs(ref[i])));
        }
        return {name, res <= kMatchTol && diff <= kMatchTol,
                "max residual = " + sci(res) + ", dense solve diff = " + sci(diff)};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

double drift(const TrajectoryResult& r) {
    double d = 0.0;
    for (const auto& s : r.samples) d = std::max(d, std::abs(s.invariant_value - r.samples[0].invariant_value));
    return d;
}

CheckResult check_trajectories(const RunConfig& cfg) {
    const std::string name = "trajectory conservation";
    try {
        const BarrierSpec& spec = cfg.barrier;
        const MatchCoefficients c = solve_coefficients(spec, zeta_terms(spec, cfg.bubble));
        const TrajectoryConstants tc = trajectory_constants(c, spec, cfg.bubble);
        struct Path {
            Region r;
            double x0, T;
            RegionIIModel m;
            double tol;
        };
        const double xc = bubble_center(cfg.bubble, 0.0);
        const Path paths[] = {
            {Region::I, -spec.a, 20.0, RegionIIModel::reduced, kDriftWaveTol},
            {Region::III, spec.a, 20.0, RegionIIModel::reduced, kDriftWaveTol},
            {Region::II, xc, 4.0, RegionIIModel::reduced, kDriftIITol},
            {Region::II, xc + 0.5, 4.0, RegionIIModel::full, kDriftIITol},
        };
        bool ok = true;
        std::ostringstream os;
        for (const auto& p : paths) {
            const auto fine = integrate_trajectory(p.r, p.x0, 0.0, p.T, 10000, tc, p.m);
            const auto coarse = integrate_trajectory(p.r, p.x0, 0.0, p.T, 50, tc, p.m);
            const auto half = integrate_trajectory(p.r, p.x0, 0.0, p.T, 100, tc, p.m);
            const double d = drift(fine), dc = drift(coarse), dh = drift(half);
            const double gain = dc / dh;
            const bool good = !fine.halted && !coarse.halted && !half.halted && d <= p.tol && gain >= kHalvingGain;
            ok = ok && good;
            os << to_string(p.r) << (p.r == Region::II ? (p.m == RegionIIModel::full ? "/full" : "/reduced") : "")
               << " drift " << sci(d) << " gain " << sci(gain) << "; ";
        }
        return {name, ok, os.str()};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

CheckResult check_time_law(std::mt19937_64& rng) {
    const std::string name = "tunneling-time law";
    try {
        std::uniform_real_distribution<double> ua(0.01, 20.0), uv(0.01, 10.0), ut(-5.0, 5.0), us(-3.0, 3.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double a = ua(rng), vs = uv(rng), t0 = ut(rng);
            double s0 = us(rng);
            if (std::abs(s0) < 1e-3) s0 = 1.0;
            const double dt = tunneling_time(a, vs, t0, s0);
            const double ref = 3.0 * a / vs;
            worst = std::max(worst, std::abs(dt - ref) / ref);
        }
        return {name, worst <= kTimeLawTol, "max rel err = " + sci(worst)};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

CheckResult check_narrow_slope(const RunConfig& cfg) {
    const std::string name = "narrow regime slope";
    try {
        const double R = cfg.bubble.R;
        const auto a = linspace(0.1 * R, R, 50);
        const auto rows = parallel::sweep(SweepRegime::narrow, a, {1.0, 2.0, 4.0}, cfg.bubble.sigma, R);
        double worst = 0.0;
        std::ostringstream os;
        for (int k = 0; k < 3; ++k) {
            std::vector<double> dt;
            for (std::size_t i = 0; i < a.size(); ++i) dt.push_back(rows[k * a.size() + i].dt);
            const double s = loglog_slope(a, dt);
            worst = std::max(worst, std::abs(s - 1.5));
            os << "slope " << s << "; ";
        }
        return {name, worst <= kSlopeTol, os.str()};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

CheckResult check_plateau(const RunConfig& cfg) {
    const std::string name = "Hartman plateau";
    try {
        const double R = cfg.bubble.R;
        const auto a = linspace(2.0 * R, 10.0 * R, 41);
        const std::vector<double> n0s = {0.5, 0.7, 1.0, 2.0};
        const auto rows = parallel::sweep(SweepRegime::wide, a, n0s, cfg.bubble.sigma, R);
        double cv_worst = 0.0, off_worst = 0.0;
        for (std::size_t k = 0; k < n0s.size(); ++k) {
            double m = 0.0, v = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) m += rows[k * a.size() + i].dt;
            m /= a.size();
            for (std::size_t i = 0; i < a.size(); ++i) v += std::pow(rows[k * a.size() + i].dt - m, 2);
            const double cv = std::sqrt(v / a.size()) / m;
            cv_worst = std::max(cv_worst, cv);
            off_worst = std::max(off_worst, std::abs(m - tunneling_time_wide(n0s[k])) / tunneling_time_wide(n0s[k]));
        }
        return {name, cv_worst <= kPlateauCvTol && off_worst <= kPlateauCvTol,
                "max CV = " + sci(cv_worst) + ", max |mean - 3/n0|/(3/n0) = " + sci(off_worst)};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

CheckResult check_threshold() {
    const std::string name = "superluminal threshold";
    try {
        bool ok = true;
        for (double n0 : {0.7, 0.3, 0.5, 1.0, 1.7, 3.0, 0.9, 0.1}) {
            const double th = superluminal_threshold(n0);
            ok = ok && !is_superluminal(th, n0) && is_superluminal(std::nextafter(th, INFINITY), n0);
            ok = ok && std::abs(th - 1.0 / n0) <= 2.0 * std::abs(std::nextafter(1.0 / n0, INFINITY) - 1.0 / n0);
            for (double a : linspace(0.5 * th, 2.0 * th, 301)) ok = ok && (is_superluminal(a, n0) == (a > th));
        }
        const double th07 = superluminal_threshold(0.7);
        ok = ok && std::abs(th07 - 1.4286) < 5e-5;
        std::ostringstream os;
        os.precision(17);
        os << "a*(0.7) = " << th07;
        return {name, ok, os.str()};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

CheckResult check_energy() {
    const std::string name = "energy asymptotics";
    try {
        const BubbleParams pn = derive_bubble(1e-3, 1.0, 1.0);
        const double Rn = bubble_radius(pn.sigma, pn.alpha1);
        const double an = 0.5 * Rn;
        const double narrow = distortion_energy(an, pn, 0.0, 1e-12) / energy_narrow(an, pn.vs);

        double lo = INFINITY, hi = -INFINITY, off = 0.0;
        for (double s : {1e-2, 1e-3, 1e-4}) {
            const BubbleParams p = derive_bubble(s, 1.0, 1.0);
            const double a = 10.0 * bubble_radius(s, p.alpha1);
            const double r = distortion_energy(a, p, 0.0, 1e-12) / energy_wide(p.vs, s);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            off = std::max(off, std::abs(r - kWideTarget));
        }
        const bool ok = narrow >= kNarrowLo && narrow <= kNarrowHi && off <= kWideTol && hi - lo <= kWideTol;
        std::ostringstream os;
        os.precision(6);
        os << "narrow ratio " << narrow << ", wide ratios in [" << lo << ", " << hi << "]";
        return {name, ok, os.str()};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

// Gamma^0_01 and Gamma^1_00 for the shift field beta(t, x) = vs f(x - vs t).
std::array<double, 2> analytic_gamma(double t, double x, const BubbleParams& p) {
    const double r = x - bubble_center(p, t);
    const double b = shift(r, p), bx = shift_dr(r, p), bt = -p.vs * bx;
    return {-b * bx, -bt - b * bx * (1.0 - b * b)};
}

CheckResult check_metric(const RunConfig& cfg) {
    const std::string name = "metric suite";
    try {
        const BubbleParams& p = cfg.bubble;
        double id_err = 0.0;
        for (double t : {0.0, 0.7, 2.0})
            for (double x : linspace(-4.0, 6.0, 41)) {
                const MetricTensor m = multiply(alcubierre_metric(t, x, p), alcubierre_inverse(t, x, p));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) id_err = std::max(id_err, std::abs(m.g[i][j] - (i == j ? 1.0 : 0.0)));
            }

        BubbleParams still = p;
        still.vs = 0.0;
        bool continuous = true;
        const MetricTensor eta = MetricTensor::minkowski();
        for (double x : {-0.5 * cfg.barrier.a, 0.5 * cfg.barrier.a})
            for (double t : {cfg.barrier.t0, cfg.barrier.t1}) continuous = continuous && alcubierre_metric(t, x, still).g == eta.g;

        // second order: error ratio close to 4 when h halves
        const auto field = alcubierre_field(p);
        double order_worst = 0.0, geo = 0.0;
        for (double x : {-0.8, 0.4, 1.3}) {
            const double t = 0.25;
            const auto ref = analytic_gamma(t, x, p);
            const auto g1 = christoffel(field, t, x, 1e-2);
            const auto g2 = christoffel(field, t, x, 5e-3);
            const double e1[2] = {std::abs(g1.gamma[0][0][1] - ref[0]), std::abs(g1.gamma[1][0][0] - ref[1])};
            const double e2[2] = {std::abs(g2.gamma[0][0][1] - ref[0]), std::abs(g2.gamma[1][0][0] - ref[1])};
            for (int k = 0; k < 2; ++k) order_worst = std::max(order_worst, std::abs(std::log2(e1[k] / e2[k]) - 2.0));

            const auto gf = christoffel(field, t, x, 1e-4, true);
            const double b = shift(x - bubble_center(p, t), p);
            geo = std::max(geo, std::abs(geodesic_constraint_residual({1.0, b, 0.0, 0.0}, gf)));
        }
        const bool ok = id_err <= kIdentityTol && continuous && order_worst <= 0.1 && geo <= kGeodesicTol;
        return {name, ok, "identity err " + sci(id_err) + ", vs=0 continuity " + (continuous ? "exact" : "broken") +
                              ", |order - 2| " + sci(order_worst) + ", geodesic residual " + sci(geo)};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

CheckResult check_fig2(const RunConfig& cfg) {
    const std::string name = "fig2 regeneration";
    try {
        const auto xs = linspace(cfg.grid.x_min, cfg.grid.x_max, cfg.grid.n_points);
        std::ostringstream os;
        write_fig2(os, xs);
        std::istringstream in(os.str());
        std::string line;
        std::getline(in, line);
        const double rin[] = {4.65, 5.65, 6.65, 7.65, 8.65, 9.65};
        const double rre[] = {-1.75, -0.75, 0.25, 1.25};
        const double rtu[] = {1.75, 2.75, 3.75, 4.75};
        const double rtr[] = {1.3, 2.3, 3.3, 4.3};
        double worst = 0.0;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            std::vector<double> v;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
            if (v.size() != 19) return {name, false, "row has " + std::to_string(v.size()) + " columns"};
            const double x = v[0], u = 1.21 * x - 1.0;
            const double w = u / 2.0 + std::atan(10.0 * std::tan(u)) / 10.0;
            std::vector<double> expect;
            for (double r : rin) expect.push_back(w + r);
            for (double r : rre) expect.push_back(-w + r);
            for (double r : rtu) expect.push_back(0.0995 * (x - 2.0) + r);
            for (double r : rtr) expect.push_back(w + r);
            for (std::size_t k = 0; k < expect.size(); ++k) worst = std::max(worst, std::abs(v[k + 1] - expect[k]));
            ++n;
        }
        const bool ok = n == xs.size() && worst <= kFig2Tol;
        return {name, ok, std::to_string(n) + " rows, max abs diff " + sci(worst)};
    } catch (const std::exception& e) {
        return fail_with(name, e);
    }
}

}  // namespace

std::vector<CheckResult> run_validation(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<CheckResult> out;
    out.push_back(check_phase(rng));
    out.push_back(check_potential(cfg, rng));
    out.push_back(check_matching(cfg));
    out.push_back(check_trajectories(cfg));
    out.push_back(check_time_law(rng));
    out.push_back(check_narrow_slope(cfg));
    out.push_back(check_plateau(cfg));
    out.push_back(check_threshold());
    out.push_back(check_energy());
    out.push_back(check_metric(cfg));
    out.push_back(check_fig2(cfg));
    return out;
}

}  // namespace geobohm
