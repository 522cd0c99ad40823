#include "geobohm/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "geobohm/error.hpp"
#include "geobohm/metric.hpp"
#include "geobohm/numerics.hpp"

namespace geobohm {

const char* to_string(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
    }
    return "?";
}

WaveConstants wave_constants(double C1, double C2, double k1, double k2, double ratio,
                             double kappa, double omega, double phi) {
    WaveConstants w;
    w.C1 = C1;
    w.C2 = C2;
    w.k1 = k1;
    w.k2 = k2;
    w.kappa = kappa;
    w.omega = omega;
    w.phi = phi;
    w.th1 = C1 * C1 + C2 * C2;
    if (w.th1 == 0.0) throw ModelError(ErrorKind::invalid_parameter, "wave_constants: zero amplitudes");
    w.th2 = 2.0 * C1 * C2 / w.th1;
    w.th3 = C1 * C1 * k1 + C2 * C2 * k2;
    if (w.th3 == 0.0) throw ModelError(ErrorKind::invalid_parameter, "wave_constants: theta3 = 0");
    w.th4 = C1 * C2 * (k1 + k2) / w.th3;
    if (std::abs(1.0 - w.th4) < 1e-14)
        throw ModelError(ErrorKind::invalid_parameter, "wave_constants: theta4 = 1");
    w.p = ratio * w.th3;

    const double P = kappa * w.p, Q = omega * w.th1;
    if (std::abs(P - Q) <= 1e-14 * (std::abs(P) + std::abs(Q))) {
        std::ostringstream os;
        os << "wave_constants: kappa theta3' = omega theta1 = " << P;
        throw ModelError(ErrorKind::singular_theta9, os.str());
    }
    w.th9 = (P * w.th4 - Q * w.th2) / (P - Q);
    if (std::abs(1.0 - w.th9) < 1e-14)
        throw ModelError(ErrorKind::nonpositive_theta12, "wave_constants: theta9 = 1, theta12 unbounded");
    w.th10 = w.p * (1.0 - w.th4) / (1.0 - w.th9);
    w.th11 = (1.0 + w.th4) / (1.0 - w.th4);
    w.th12 = (1.0 + w.th9) / (1.0 - w.th9);
    if (!(w.th12 > 0.0)) {
        std::ostringstream os;
        os << "wave_constants: theta12 = " << w.th12 << " <= 0";
        throw ModelError(ErrorKind::nonpositive_theta12, os.str());
    }
    w.unit_th12 = std::abs(w.th12 - 1.0) < 1e-12;
    if (w.unit_th12) {
        w.sigma = {0.5 * w.th10 * (1.0 + w.th11), 0.5 * w.th10 * (w.th11 - 1.0), 0.0};
    } else {
        const double r = std::sqrt(w.th12);
        w.sigma[0] = w.th10 * (1.0 - w.th11) / (1.0 - w.th12);
        w.sigma[1] = 2.0 * w.th10 * (w.th11 - w.th12) / (r * (1.0 - w.th12));
        w.sigma[2] = 1.0 / r;
    }
    return w;
}

void fill_region_II(TrajectoryConstants& tc, const BubbleParams& p) {
    tc.bubble = p;
    const PhaseConstants pc = phase_constants(p.alpha0, p.alpha1);
    const double a0 = p.alpha0, a1 = p.alpha1;
    const double b1 = pc.beta1.real();
    const double msum = (pc.mu0 + pc.mu1).real();
    const double mprod = (pc.mu0 * pc.mu1).real();
    tc.iota0 = (2.0 * a0 * pc.beta0 * (pc.mu1 - pc.mu0) / pc.root).real();
    tc.iota = {0.0, 1.0 - a0 * a0, 2.0 * a1, 4.0 * b1 * (1.0 - a0 * a0) + a1 * a1, 8.0 * b1 * a1,
               4.0 * b1 * a1 * a1};
    tc.iotaPrime = {0.0,
                    2.0 * a1,
                    4.0 * msum + a1 * a1,
                    8.0 * a1 * msum,
                    4.0 * (4.0 * mprod + a1 * a1 * msum),
                    32.0 * a1 * mprod,
                    16.0 * a1 * a1 * mprod};
    for (int j = 1; j <= 5; ++j) tc.iotaDoublePrime[j] = tc.iota0 * tc.iota[j] - tc.iotaPrime[j];
    tc.iotaDoublePrime[6] = -tc.iotaPrime[6];

    double sp = 0.0, sdp = 0.0, jp = 0.0, jdp = 0.0;
    for (int j = 1; j <= 6; ++j) {
        sp += tc.iotaPrime[j];
        sdp += tc.iotaDoublePrime[j];
        jp += j * tc.iotaPrime[j];
        jdp += j * tc.iotaDoublePrime[j];
    }
    const double D = sdp - 1.0;
    if (std::abs(D) < 1e-14) throw ModelError(ErrorKind::singular_taylor, "trajectory_constants: Taylor denominator D = 0");
    const double N = D * jp - (1.0 + sp) * jdp;
    tc.sigmaII = {-(1.0 + sp) / D, -N / (D * D)};

    tc.v0 = -a0 / (1.0 + a1);
    if (p.vs == 0.0 || std::abs(tc.v0 - p.vs) < 1e-14 * std::abs(p.vs))
        throw ModelError(ErrorKind::singular_taylor, "trajectory_constants: drift velocity equals vs");
    const double g = tc.v0 - p.vs;
    tc.drift0 = 1.0 / g;
    tc.drift1 = tc.v0 * a1 / ((1.0 + a1) * g * g);
}

TrajectoryConstants trajectory_constants(double cI1, double cI2, double cIII1, double cIII2,
                                         const BarrierSpec& spec, const BubbleParams& p,
                                         double phiI, double phiIII) {
    TrajectoryConstants tc;
    const double Acal = spec.A + spec.B;
    if (Acal == 0.0) throw ModelError(ErrorKind::invalid_parameter, "trajectory_constants: A + B = 0");
    const double ratio = (spec.A - spec.B) / Acal;
    const double dk = spec.deltaK(), dE = spec.deltaE();

    tc.I = wave_constants(cI1, cI2, spec.k1, spec.k2, ratio, ratio * dk, dE, phiI);
    tc.III = wave_constants(cIII1, cIII2, spec.k1, spec.k2, 1.0, dk, dE, phiIII);

    tc.theta = {0.0, tc.I.th1, tc.I.th2, tc.I.th3, tc.I.th4, tc.III.th1, tc.III.th2, tc.III.th3,
                tc.III.th4, tc.I.th9, tc.I.th10, tc.I.th11, tc.I.th12};
    tc.theta3Prime = tc.I.p;
    tc.thetaP = {0.0, 0.0, 0.0, 0.0, 0.0, tc.III.th1, tc.III.th2, tc.III.th3, tc.III.th4,
                 tc.III.th9, tc.III.th10, tc.III.th11, tc.III.th12};
    tc.sigmaI = tc.I.sigma;
    tc.sigmaIII = tc.III.sigma;
    fill_region_II(tc, p);
    return tc;
}

TrajectoryConstants trajectory_constants(const MatchCoefficients& c, const BarrierSpec& spec,
                                         const BubbleParams& p) {
    return trajectory_constants(std::abs(c.cI1), std::abs(c.cI2), std::abs(c.cIII1), std::abs(c.cIII2),
                                spec, p, std::arg(c.cI2) - std::arg(c.cI1),
                                std::arg(c.cIII2) - std::arg(c.cIII1));
}

double xi(const WaveConstants& w, double x, double t) { return w.kappa * x - w.omega * t + w.phi; }

double wave_momentum(const WaveConstants& w, double x, double t) {
    const double c = std::cos(xi(w, x, t));
    const double den = w.th1 * (1.0 + w.th2 * c);
    if (std::abs(den) <= 1e-14 * w.th1) {
        std::ostringstream os;
        os << "momentum node at x = " << x << ", t = " << t;
        throw ModelError(ErrorKind::node, os.str());
    }
    return w.p * (1.0 + w.th4 * c) / (1.0 + w.th2 * c) / w.th1;
}

double momentum_I(double x, double t, const TrajectoryConstants& tc) { return wave_momentum(tc.I, x, t); }

double momentum_III(double x, double t, const TrajectoryConstants& tc) { return wave_momentum(tc.III, x, t); }

double momentum_II(double x, double t, const BubbleParams& p, const PhaseConstants& pc) {
    if (p.vs == 0.0) return 0.0;
    const double u = 2.0 * p.sigma * (x - bubble_center(p, t));
    const double c = std::cosh(u);
    const double a0 = p.alpha0, a1 = p.alpha1;
    const double g11 = (1.0 - a0 * a0 + 2.0 * a1 * c + a1 * a1 * c * c) / (1.0 + 2.0 * a1 * c + a1 * a1 * c * c);
    const double xh = 0.5 * std::acos(1.0 / c);
    const double cs = std::cos(xh) * std::cos(xh), sn = std::sin(xh) * std::sin(xh);
    const cd bracket = (pc.beta1 - pc.mu0) / (pc.mu0 * cs + sn) - (pc.beta1 - pc.mu1) / (pc.mu1 * cs + sn);
    const cd P = -a0 * pc.beta0 / (c * 2.0 * pc.root) * g11 * bracket;
    if (std::abs(P.imag()) > 1e-8 * std::max(1.0, std::abs(P.real())))
        throw ModelError(ErrorKind::branch, "momentum_II: imaginary residue");
    return P.real();
}

double phase_integral(const WaveConstants& w, double X) {
    if (w.unit_th12) return w.sigma[0] * X + w.sigma[1] * std::sin(X);
    const double wrap = std::numbers::pi * std::round(X / (2.0 * std::numbers::pi));
    return w.sigma[0] * X + w.sigma[1] * (std::atan(w.sigma[2] * std::tan(0.5 * X)) + wrap);
}

double velocity_II_full(double r_s, const TrajectoryConstants& tc) {
    const double c = std::cosh(2.0 * tc.bubble.sigma * r_s);
    double num = 0.0, den = 1.0, cp = 1.0;
    for (int j = 1; j <= 6; ++j) {
        cp *= c;
        if (j <= 5) num += tc.iota[j] * cp;
        den += tc.iotaPrime[j] * cp;
    }
    if (den == 0.0) throw ModelError(ErrorKind::pole, "region-II velocity: denominator vanishes");
    return tc.iota0 * num / den;
}

namespace {

double reduced_gap(double r_s, const TrajectoryConstants& tc) {
    const double s = tc.bubble.sigma;
    return tc.drift0 + 2.0 * s * s * tc.drift1 * r_s * r_s;
}

}  // namespace

double velocity(Region r, double x, double t, const TrajectoryConstants& tc, RegionIIModel m) {
    switch (r) {
        case Region::I: return momentum_I(x, t, tc);
        case Region::III: return momentum_III(x, t, tc);
        case Region::II: {
            const double rs = x - bubble_center(tc.bubble, t);
            if (m == RegionIIModel::full) return velocity_II_full(rs, tc);
            const double g = reduced_gap(rs, tc);
            if (g == 0.0) throw ModelError(ErrorKind::pole, "reduced region-II drift: pole");
            return tc.bubble.vs + 1.0 / g;
        }
    }
    return 0.0;
}

double implicit_invariant(Region r, double x, double t, const TrajectoryConstants& tc, RegionIIModel m) {
    switch (r) {
        case Region::I:
        case Region::III: {
            const WaveConstants& w = r == Region::I ? tc.I : tc.III;
            return phase_integral(w, xi(w, x, t)) - (w.kappa * w.p - w.omega * w.th1) * x;
        }
        case Region::II: {
            const double rs = x - bubble_center(tc.bubble, t);
            if (m == RegionIIModel::reduced) {
                const double s = tc.bubble.sigma;
                return tc.drift0 * rs + (2.0 * s * s / 3.0) * tc.drift1 * rs * rs * rs - t;
            }
            auto integrand = [&](double q) { return 1.0 / (velocity_II_full(q, tc) - tc.bubble.vs); };
            return numerics::integrate(integrand, 0.0, rs, 1e-13).value - t;
        }
    }
    return 0.0;
}

TrajectoryResult integrate_trajectory(Region r, double x0, double t_start, double t_end, int steps,
                                      const TrajectoryConstants& tc, RegionIIModel m) {
    if (steps < 1) throw ModelError(ErrorKind::invalid_parameter, "integrate_trajectory: steps < 1");
    TrajectoryResult out;
    out.samples.reserve(static_cast<std::size_t>(steps) + 1);
    const double h = (t_end - t_start) / steps;
    auto rhs = [&](double t, double x) { return velocity(r, x, t, tc, m); };
    // sign of the ODE denominator, used to detect a crossing within a step
    auto gate = [&](double t, double x) {
        if (r == Region::II) {
            const double rs = x - bubble_center(tc.bubble, t);
            if (m == RegionIIModel::reduced) return reduced_gap(rs, tc);
            const double c = std::cosh(2.0 * tc.bubble.sigma * rs);
            double den = 1.0, cp = 1.0;
            for (int j = 1; j <= 6; ++j) den += tc.iotaPrime[j] * (cp *= c);
            return den;
        }
        const WaveConstants& w = r == Region::I ? tc.I : tc.III;
        return 1.0 + w.th2 * std::cos(xi(w, x, t));
    };
    double t = t_start, x = x0;
    try {
        out.samples.push_back({t, x, r, rhs(t, x), implicit_invariant(r, x, t, tc, m)});
        for (int i = 0; i < steps; ++i) {
            const double g0 = gate(t, x);
            const double xn = numerics::rk4_step(rhs, t, x, h);
            const double tn = t_start + (i + 1) * h;
            if (!std::isfinite(xn) || gate(tn, xn) * g0 <= 0.0) {
                std::ostringstream os;
                os << "step " << i + 1 << " crosses a node or pole near t = " << tn;
                throw ModelError(ErrorKind::node, os.str());
            }
            t = tn;
            x = xn;
            out.samples.push_back({t, x, r, rhs(t, x), implicit_invariant(r, x, t, tc, m)});
        }
    } catch (const ModelError& e) {
        out.halted = true;
        out.message = e.what();
    }
    return out;
}

const char* to_string(Fig2Family f) {
    switch (f) {
        case Fig2Family::incident: return "in";
        case Fig2Family::reflected: return "re";
        case Fig2Family::tunneling: return "tu";
        case Fig2Family::transmitted: return "tr";
    }
    return "?";
}

const std::vector<double>& fig2_rho_values(Fig2Family f) {
    static const std::vector<double> in = {4.65, 5.65, 6.65, 7.65, 8.65, 9.65};
    static const std::vector<double> re = {-1.75, -0.75, 0.25, 1.25};
    static const std::vector<double> tu = {1.75, 2.75, 3.75, 4.75};
    static const std::vector<double> tr = {1.3, 2.3, 3.3, 4.3};
    switch (f) {
        case Fig2Family::incident: return in;
        case Fig2Family::reflected: return re;
        case Fig2Family::tunneling: return tu;
        case Fig2Family::transmitted: return tr;
    }
    return in;
}

double fig2_value(Fig2Family f, double x, double rho) {
    const double u = 1.21 * x - 1.0;
    const double wave = u / 2.0 + std::atan(10.0 * std::tan(u)) / 10.0;
    switch (f) {
        case Fig2Family::incident:
        case Fig2Family::transmitted: return wave + rho;
        case Fig2Family::reflected: return -u / 2.0 - std::atan(10.0 * std::tan(u)) / 10.0 + rho;
        case Fig2Family::tunneling: return 0.0995 * (x - 2.0) + rho;
    }
    return 0.0;
}

Fig2Table fig2_dataset(const std::vector<double>& xs) {
    static const Fig2Family fams[] = {Fig2Family::incident, Fig2Family::reflected, Fig2Family::tunneling,
                                      Fig2Family::transmitted};
    Fig2Table t;
    t.columns.push_back("x");
    for (auto f : fams)
        for (double rho : fig2_rho_values(f)) {
            std::ostringstream os;
            os << to_string(f) << '_' << rho;
            t.columns.push_back(os.str());
        }
    t.rows.reserve(xs.size());
    for (double x : xs) {
        std::vector<double> row{x};
        for (auto f : fams)
            for (double rho : fig2_rho_values(f)) row.push_back(fig2_value(f, x, rho));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace geobohm
