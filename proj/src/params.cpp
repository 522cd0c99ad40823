#include "geobohm/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geobohm/error.hpp"

namespace geobohm {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_parameter: return "invalid parameter";
        case ErrorKind::degenerate_bubble: return "degenerate bubble";
        case ErrorKind::degenerate_phase: return "degenerate phase constants";
        case ErrorKind::pole: return "pole";
        case ErrorKind::branch: return "branch failure";
        case ErrorKind::singular_boundary: return "singular boundary value";
        case ErrorKind::degenerate_matching: return "degenerate matching system";
        case ErrorKind::resonant: return "resonant degeneracy";
        case ErrorKind::singular_theta9: return "singular theta9";
        case ErrorKind::nonpositive_theta12: return "nonpositive theta12";
        case ErrorKind::singular_taylor: return "singular Taylor denominator";
        case ErrorKind::node: return "momentum node";
        case ErrorKind::singular_metric: return "singular metric";
    }
    return "unknown";
}

void validate(const BarrierSpec& s) {
    if (!(s.a > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "barrier width a must be positive");
    if (!(s.V0 > std::max(s.E1, s.E2))) {
        std::ostringstream os;
        os << "V0 = " << s.V0 << " must exceed max(E1, E2) = " << std::max(s.E1, s.E2);
        throw ModelError(ErrorKind::invalid_parameter, os.str());
    }
}

double potential_V(double x, const BarrierSpec& spec) {
    const double h = 0.5 * spec.a;
    return (x >= -h && x <= h) ? spec.V0 : 0.0;
}

BubbleParams derive_bubble(double sigma, double R, double vs, double xs0,
                           std::optional<double> alpha0, std::optional<double> alpha1) {
    if (!(sigma > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "sigma must be positive");
    if (!(R > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "R must be positive");
    BubbleParams p;
    p.sigma = sigma;
    p.R = R;
    p.vs = vs;
    p.xs0 = xs0;
    p.alpha1 = alpha1 ? *alpha1 : 1.0 / std::cosh(2.0 * sigma * R);
    p.alpha0 = alpha0 ? *alpha0 : -vs * std::tanh(2.0 * sigma * R) / (2.0 * std::tanh(sigma * R));
    if (std::abs(p.alpha1) < 1e-9 || std::abs(p.alpha1 - 1.0) < 1e-9) {
        std::ostringstream os;
        os << "alpha1 = " << p.alpha1 << " is within 1e-9 of 0 or 1 (sigma = " << sigma
           << ", R = " << R << ")";
        throw ModelError(ErrorKind::degenerate_bubble, os.str());
    }
    return p;
}

double dispersion(double k, Dispersion mode) {
    return mode == Dispersion::relativistic ? std::sqrt(1.0 + k * k) : 0.5 * k * k;
}

double bubble_center(const BubbleParams& p, double t) { return p.xs0 + p.vs * t; }

}  // namespace geobohm
