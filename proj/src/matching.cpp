#include "geobohm/matching.hpp"

#include <cmath>
#include <sstream>

#include "geobohm/error.hpp"
#include "geobohm/metric.hpp"

namespace geobohm {

namespace {

const cd I(0.0, 1.0);

cd region_II_slope_printed(double r_s, const BubbleParams& p, const PhaseConstants& pc) {
    const double u = 2.0 * p.sigma * r_s;
    const double ch = std::cosh(u);
    const double gap = std::sqrt(ch * ch - 1.0);
    if (gap == 0.0) {
        std::ostringstream os;
        os << "zeta_terms: boundary point sits at the bubble centre (r_s = " << r_s
           << "), sqrt(cosh^2 - 1) = 0";
        throw ModelError(ErrorKind::singular_boundary, os.str());
    }
    const double xh = 0.5 * x_prime(r_s, p.sigma);
    const double sec2 = 1.0 / (std::cos(xh) * std::cos(xh));
    const double t2 = std::tan(xh) * std::tan(xh);
    const double sgn = r_s >= 0.0 ? 1.0 : -1.0;
    const cd bracket = (pc.beta1 - pc.mu1) / (pc.mu1 + t2) - (pc.beta1 - pc.mu0) / (pc.mu0 + t2);
    return p.alpha0 * pc.beta0 * sec2 * std::tanh(u) * sgn / (2.0 * pc.root * gap) * bracket;
}

double real_part_checked(cd v) {
    if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v.real())))
        throw ModelError(ErrorKind::branch, "zeta_terms: region-II slope has an imaginary residue");
    return v.real();
}

}  // namespace

ZetaTerms zeta_terms(const BarrierSpec& spec, const BubbleParams& p, RightBoundaryTime rt) {
    validate(spec);
    const PhaseConstants pc = phase_constants(p.alpha0, p.alpha1);
    ZetaTerms z;
    z.t_left = spec.t0;
    z.t_right = rt == RightBoundaryTime::t1 ? spec.t1 : spec.t0;
    const double xl = -0.5 * spec.a, xr = 0.5 * spec.a;
    const double Acal = spec.A + spec.B, Bcal = spec.A - spec.B;

    for (int l = 1; l <= 2; ++l) {
        const double k = l == 1 ? spec.k1 : spec.k2;
        const double E = l == 1 ? spec.E1 : spec.E2;
        const double th = k * xl - E * z.t_left;
        const double sr = sqrt_rho_I(xl, z.t_left, spec, l);
        const cd e = std::exp(I * phase_I(xl, z.t_left, spec, l));
        z.zeta[l] = sr * e;
        z.zetaPrime[l] = k * ((Bcal * Bcal - Acal * Acal) * std::sin(2.0 * th) + 2.0 * I * Acal * Bcal) /
                         (2.0 * sr) * e;
    }

    const double xb[2] = {xl, xr};
    const double tb[2] = {z.t_left, z.t_right};
    for (int j = 0; j < 2; ++j) {
        const double xs = bubble_center(p, tb[j]);
        const double S = phase_II(xb[j], xs, p, pc) - (spec.V0 - spec.E1) * tb[j];
        const double dS = real_part_checked(region_II_slope_printed(xb[j] - xs, p, pc));
        z.zeta[3 + j] = std::exp(I * S);
        z.zetaPrime[3 + j] = I * dS * z.zeta[3 + j];
    }

    for (int l = 1; l <= 2; ++l) {
        const double k = l == 1 ? spec.k1 : spec.k2;
        z.zeta[4 + l] = std::exp(I * phase_III(xr, z.t_right, spec, l));
        z.zetaPrime[4 + l] = I * k * z.zeta[4 + l];
    }
    return z;
}

MatchCoefficients solve_coefficients(const BarrierSpec& spec, const ZetaTerms& z, cd cIII1) {
    const double dE = spec.deltaE();
    const cd u0 = std::exp(I * dE * z.t_left);
    const cd uR = std::exp(I * dE * z.t_right);
    if (std::abs(uR - 1.0) <= 1e-9) {
        std::ostringstream os;
        os << "solve_coefficients: dE * t = " << dE * z.t_right << " is a multiple of 2 pi";
        throw ModelError(ErrorKind::resonant, os.str());
    }
    const auto& Z = z.zeta;
    const auto& P = z.zetaPrime;
    const cd den12 = Z[1] * P[2] - P[1] * Z[2];
    const cd den46 = Z[4] * P[6] - P[4] * Z[6];
    if (std::abs(den12) < 1e-300 || std::abs(den46) < 1e-300)
        throw ModelError(ErrorKind::degenerate_matching, "solve_coefficients: zero varpi denominator");

    MatchCoefficients c;
    c.zeta = Z;
    c.zetaPrime = P;
    c.t_left = z.t_left;
    c.t_right = z.t_right;
    c.varpi[1] = (P[4] * Z[5] - Z[4] * P[5]) / den46;
    c.varpi[2] = (P[5] * Z[6] - Z[5] * P[6]) / den46;
    c.varpi[3] = (Z[1] * P[3] - P[1] * Z[3]) / den12;
    c.varpi[4] = (P[2] * Z[3] - Z[2] * P[3]) / den12;

    c.cIII1 = cIII1;
    c.cIII2 = c.varpi[1] * cIII1;
    c.cII1 = (c.varpi[2] * cIII1 + uR) / (uR - 1.0);
    c.cII2 = 1.0 - c.cII1;
    const cd w0 = (1.0 - u0) * c.cII1 + u0;
    c.cI1 = c.varpi[4] * w0;
    c.cI2 = c.varpi[3] * w0;
    return c;
}

std::array<double, 4> matching_residuals(const MatchCoefficients& c, const BarrierSpec& spec) {
    const double dE = spec.deltaE();
    const cd w0 = c.cII1 + c.cII2 * std::exp(I * dE * c.t_left);
    const cd wR = c.cII1 + c.cII2 * std::exp(I * dE * c.t_right);
    const auto& Z = c.zeta;
    const auto& P = c.zetaPrime;
    auto rel = [](cd a, cd b, cd rhs) {
        const double scale = std::abs(a) + std::abs(b) + std::abs(rhs);
        return scale == 0.0 ? 0.0 : std::abs(a + b - rhs) / scale;
    };
    return {rel(c.cI1 * Z[1], c.cI2 * Z[2], Z[3] * w0), rel(c.cI1 * P[1], c.cI2 * P[2], P[3] * w0),
            rel(c.cIII1 * Z[5], c.cIII2 * Z[6], Z[4] * wR),
            rel(c.cIII1 * P[5], c.cIII2 * P[6], P[4] * wR)};
}

Transmission transmission(cd cIII1, cd varpi1, double deltaE, double t1, double Xi) {
    const cd e = std::exp(I * deltaE * t1);
    const cd T = cIII1 * std::sqrt(1.0 + varpi1 * varpi1 * e * e + 2.0 * varpi1 * e * std::cos(Xi));
    return {T, std::abs(T)};
}

Transmission transmission_from(const MatchCoefficients& c, double Xi) {
    const cd r = c.cIII2 / c.cIII1;
    const cd T = c.cIII1 * std::sqrt(1.0 + r * r + 2.0 * r * std::cos(Xi));
    return {T, std::abs(T)};
}

cd wavefunction(double x, double t, const MatchCoefficients& c, const BarrierSpec& spec,
                const BubbleParams& p) {
    const double h = 0.5 * spec.a;
    if (x < -h) {
        cd psi = 0.0;
        const cd C[2] = {c.cI1, c.cI2};
        for (int l = 1; l <= 2; ++l)
            psi += C[l - 1] * sqrt_rho_I(x, t, spec, l) * std::exp(I * phase_I(x, t, spec, l));
        return psi;
    }
    if (x > h)
        return c.cIII1 * std::exp(I * phase_III(x, t, spec, 1)) +
               c.cIII2 * std::exp(I * phase_III(x, t, spec, 2));
    const double S = phase_II(x, bubble_center(p, t), p);
    return (c.cII1 * std::exp(I * spec.E1 * t) + c.cII2 * std::exp(I * spec.E2 * t)) *
           std::exp(I * (S - spec.V0 * t));
}

}  // namespace geobohm
