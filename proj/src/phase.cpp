#include "geobohm/phase.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "geobohm/error.hpp"
#include "geobohm/metric.hpp"
#include "geobohm/numerics.hpp"

namespace geobohm {

namespace {

constexpr double kImagTol = 1e-8;

double real_checked(cd v, const char* where, const BubbleParams& p) {
    if (std::abs(v.imag()) > kImagTol * std::max(1.0, std::abs(v.real()))) {
        std::ostringstream os;
        os << where << ": imaginary residue " << v.imag() << " (alpha0 = " << p.alpha0
           << ", alpha1 = " << p.alpha1 << ", sigma = " << p.sigma << ")";
        throw ModelError(ErrorKind::branch, os.str());
    }
    return v.real();
}

}  // namespace

PhaseConstants phase_constants(double alpha0, double alpha1) {
    const double D = (alpha1 - 1.0) * (alpha1 - 1.0) - alpha0 * alpha0;
    if (std::abs(D) < 1e-9) {
        std::ostringstream os;
        os << "phase_constants: (alpha1 - 1)^2 = alpha0^2 (alpha0 = " << alpha0
           << ", alpha1 = " << alpha1 << ")";
        throw ModelError(ErrorKind::degenerate_phase, os.str());
    }
    if (std::abs(alpha1 - 1.0) < 1e-9)
        throw ModelError(ErrorKind::degenerate_phase, "phase_constants: alpha1 = 1");
    PhaseConstants pc;
    pc.beta0 = 2.0 * (alpha1 - 1.0) / D;
    pc.beta1 = (alpha1 + 1.0) / (alpha1 - 1.0);
    pc.beta2 = ((alpha1 + 1.0) * (alpha1 + 1.0) - alpha0 * alpha0) / D;
    pc.beta3 = (alpha1 * alpha1 - 1.0 + alpha0 * alpha0) / D;
    pc.root = std::sqrt(pc.beta3 * pc.beta3 - pc.beta2);
    pc.mu0 = pc.beta3 - pc.root;
    pc.mu1 = pc.beta3 + pc.root;
    if (std::abs(pc.root) < 1e-12)
        throw ModelError(ErrorKind::degenerate_phase, "phase_constants: coincident roots mu0 = mu1");
    return pc;
}

double x_prime(double r_s, double sigma) { return std::acos(1.0 / std::cosh(2.0 * sigma * r_s)); }

cd phase_II_halfline(double r_s, const BubbleParams& p, const PhaseConstants& pc) {
    const double z = std::tan(0.5 * x_prime(r_s, p.sigma));
    const cd s0 = std::sqrt(pc.mu0), s1 = std::sqrt(pc.mu1);
    const cd K = p.alpha0 * pc.beta0 / (2.0 * p.sigma * pc.root);
    return K * ((pc.beta1 - pc.mu0) / s0 * std::atan(z / s0) -
                (pc.beta1 - pc.mu1) / s1 * std::atan(z / s1));
}

double phase_II(double x, double x_s, const BubbleParams& p) {
    return phase_II(x, x_s, p, phase_constants(p.alpha0, p.alpha1));
}

double phase_II(double x, double x_s, const BubbleParams& p, const PhaseConstants& pc) {
    if (p.vs == 0.0) return 0.0;
    const double r = x - x_s;
    const double v = real_checked(phase_II_halfline(std::abs(r), p, pc), "phase_II", p);
    return r >= 0.0 ? -v : v;
}

double phase_II_slope(double r_s, const BubbleParams& p) {
    const double b = shift(r_s, p);
    return -2.0 * b / (1.0 - b * b);
}

double phase_II_quadrature(double r_a, double r_b, const BubbleParams& p, double abs_tol) {
    if (r_a == r_b) return 0.0;
    auto gap = [&](double r) {
        const double b = shift(r, p);
        return 1.0 - b * b;
    };
    const double lo = std::min(r_a, r_b), hi = std::max(r_a, r_b);
    const double g0 = gap(lo), g1 = gap(hi), gc = (lo < 0.0 && hi > 0.0) ? gap(0.0) : g0;
    bool crossed = g0 * g1 <= 0.0 || g0 * gc <= 0.0;
    for (int i = 1; i < 64 && !crossed; ++i) crossed = g0 * gap(lo + (hi - lo) * i / 64.0) <= 0.0;
    if (crossed) {
        std::ostringstream os;
        os << "phase_II_quadrature: |vs f| = 1 inside [" << r_a << ", " << r_b << "]";
        throw ModelError(ErrorKind::pole, os.str());
    }
    return numerics::integrate([&](double r) { return phase_II_slope(r, p); }, r_a, r_b, abs_tol).value;
}

namespace {

void mode_values(const BarrierSpec& spec, int mode, double& k, double& E) {
    if (mode == 1) {
        k = spec.k1;
        E = spec.E1;
    } else if (mode == 2) {
        k = spec.k2;
        E = spec.E2;
    } else {
        throw ModelError(ErrorKind::invalid_parameter, "mode must be 1 or 2");
    }
}

}  // namespace

double phase_I(double x, double t, const BarrierSpec& spec, int mode, AmplitudeConvention conv) {
    double k, E;
    mode_values(spec, mode, k, E);
    const double Acal = spec.A + spec.B;
    if (Acal == 0.0) throw ModelError(ErrorKind::invalid_parameter, "phase_I: A + B = 0");
    const double theta = k * x - E * t;
    if (conv == AmplitudeConvention::real_ratio)
        return std::atan((spec.A - spec.B) * std::tan(theta) / Acal);
    const cd Bcal(0.0, spec.A - spec.B);
    const cd S = std::atan(Bcal * std::tan(theta) / Acal);
    if (std::abs(S.imag()) > kImagTol) {
        std::ostringstream os;
        os << "phase_I: imaginary residue " << S.imag() << " with B-cal = i(A - B) (A = " << spec.A
           << ", B = " << spec.B << ")";
        throw ModelError(ErrorKind::branch, os.str());
    }
    return S.real();
}

double sqrt_rho_I(double x, double t, const BarrierSpec& spec, int mode) {
    double k, E;
    mode_values(spec, mode, k, E);
    const double theta = k * x - E * t;
    const double Acal = spec.A + spec.B, Bcal = spec.A - spec.B;
    const double c = std::cos(theta), s = std::sin(theta);
    return std::sqrt(Acal * Acal * c * c + Bcal * Bcal * s * s);
}

double phase_III(double x, double t, const BarrierSpec& spec, int mode) {
    double k, E;
    mode_values(spec, mode, k, E);
    return k * x - E * t;
}

Superposed superposed_phase_density(const std::vector<Component>& components) {
    if (components.empty())
        throw ModelError(ErrorKind::invalid_parameter, "superposed_phase_density: no components");
    double num = 0.0, den = 0.0;
    for (const auto& c : components) {
        num += c.C * c.sqrt_rho * std::sin(c.S);
        den += c.C * c.sqrt_rho * std::cos(c.S);
    }
    // sum of C^2 rho plus pairwise interference terms
    double rho = 0.0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& a = components[i];
        rho += a.C * a.C * a.sqrt_rho * a.sqrt_rho;
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            const auto& b = components[j];
            rho += 2.0 * a.C * b.C * a.sqrt_rho * b.sqrt_rho * std::cos(b.S - a.S);
        }
    }
    Superposed out;
    out.sqrt_rho = std::sqrt(std::max(rho, 0.0));
    out.phase_defined = (num != 0.0 || den != 0.0) && out.sqrt_rho > 1e-14;
    out.S = out.phase_defined ? std::atan2(num, den) : std::numeric_limits<double>::quiet_NaN();
    return out;
}

}  // namespace geobohm
