#include "geobohm/potential.hpp"

#include <cmath>
#include <sstream>

#include "geobohm/error.hpp"
#include "geobohm/metric.hpp"
#include "geobohm/numerics.hpp"

namespace geobohm {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::narrow: return "narrow";
        case Regime::wide: return "wide";
        case Regime::intermediate: return "intermediate";
    }
    return "unknown";
}

EnergyRegime classify_regime(double a, double R) {
    Regime r = Regime::intermediate;
    if (a <= R) r = Regime::narrow;
    else if (a > 2.0 * R) r = Regime::wide;
    return {r, a, R};
}

double quantum_potential_II_of_shift(double beta) {
    if (!(std::abs(beta) < 1.0)) {
        std::ostringstream os;
        os << "quantum_potential_II: |vs f| = " << std::abs(beta) << " >= 1";
        throw ModelError(ErrorKind::pole, os.str());
    }
    return std::log(std::abs((1.0 + beta) / std::sqrt(1.0 - beta * beta))) + 0.5 * beta * beta;
}

double quantum_potential_II(double x, double t, const BubbleParams& p) {
    return quantum_potential_II_of_shift(shift(x - bubble_center(p, t), p));
}

double dQ_consistency(double x, const BubbleParams& p, double t, double h) {
    const double f = bubble_profile(x - bubble_center(p, t), p);
    const double vs = p.vs;
    auto Q = [&](double ff) { return quantum_potential_II_of_shift(vs * ff); };
    const double fd = numerics::central_diff(Q, f, h);
    const double b = vs * f;
    return std::abs(fd - (vs / (1.0 - b * b) + vs * b));
}

double quantum_potential_region(double g00, int sign) {
    if (!(g00 < 0.0)) throw ModelError(ErrorKind::invalid_parameter, "quantum_potential_region: g00 must be negative");
    const double m = -g00;
    return (sign >= 0 ? 1.0 : -1.0) * m * std::sqrt(m) / 3.0;
}

std::vector<double> bohm_potential_generic(const std::vector<double>& rho, double dx) {
    const std::size_t n = rho.size();
    if (n < 3) throw ModelError(ErrorKind::invalid_parameter, "bohm_potential_generic: need at least 3 points");
    if (!(dx > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "bohm_potential_generic: dx must be positive");
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(rho[i] > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "bohm_potential_generic: nonpositive density");
        a[i] = std::sqrt(rho[i]);
    }
    const double h2 = dx * dx;
    std::vector<double> q(n);
    for (std::size_t i = 1; i + 1 < n; ++i) q[i] = -0.5 * (a[i - 1] - 2.0 * a[i] + a[i + 1]) / h2 / a[i];
    if (n >= 4) {
        q[0] = -0.5 * (2.0 * a[0] - 5.0 * a[1] + 4.0 * a[2] - a[3]) / h2 / a[0];
        q[n - 1] = -0.5 * (2.0 * a[n - 1] - 5.0 * a[n - 2] + 4.0 * a[n - 3] - a[n - 4]) / h2 / a[n - 1];
    } else {
        q[0] = -0.5 * (a[0] - 2.0 * a[1] + a[2]) / h2 / a[0];
        q[2] = -0.5 * (a[0] - 2.0 * a[1] + a[2]) / h2 / a[2];
    }
    return q;
}

double distortion_energy(double a, const BubbleParams& p, double x_s, double abs_tol) {
    if (!(a > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "distortion_energy: a must be positive");
    auto integrand = [&](double x) {
        const double b = shift(x - x_s, p);
        return 0.5 * b * b;
    };
    const double lo = -0.5 * a, hi = 0.5 * a;
    // split at the profile peak when it lies inside
    if (x_s > lo && x_s < hi)
        return numerics::integrate(integrand, lo, x_s, 0.5 * abs_tol).value +
               numerics::integrate(integrand, x_s, hi, 0.5 * abs_tol).value;
    return numerics::integrate(integrand, lo, hi, abs_tol).value;
}

double energy_narrow(double a, double vs) { return vs * vs * a / 8.0; }

double energy_wide(double vs, double sigma) { return vs * vs / sigma; }

FApproximations f_approximations(double r_s, const BubbleParams& p) {
    const double a0 = p.alpha0, a1 = p.alpha1, u = 2.0 * p.sigma * r_s;
    FApproximations out;
    out.exact = bubble_profile(r_s, p);
    out.inner = a0 / (p.vs * (1.0 + a1)) * (1.0 - a1 * u * u / (2.0 * (1.0 + a1)));
    out.outer = 2.0 * a0 / (p.vs * a1) * std::exp(-std::abs(u));
    return out;
}

}  // namespace geobohm
