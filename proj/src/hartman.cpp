#include "geobohm/hartman.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "geobohm/error.hpp"
#include "geobohm/kernels.hpp"
#include "geobohm/metric.hpp"

namespace geobohm {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << what << " = " << v << " must be positive";
        throw ModelError(ErrorKind::invalid_parameter, os.str());
    }
}

}  // namespace

double tunneling_time(double a, double vs, double t0, double sigma0) {
    require_positive(a, "a");
    require_positive(vs, "vs");
    if (sigma0 == 0.0) sigma0 = -1.5 / vs;
    const double rho = sigma0 * (-0.5 * a - vs * t0 / 3.0);
    const double t1 = 3.0 * (0.5 * a - rho / sigma0) / vs;
    return t1 - t0;
}

double tunneling_time_closed(double a, double vs) {
    require_positive(a, "a");
    require_positive(vs, "vs");
    return 3.0 * a / vs;
}

double tunneling_time_narrow(double a, double E) {
    require_positive(a, "a");
    require_positive(E, "E");
    return 3.0 * std::sqrt(a * a * a / (8.0 * E));
}

double tunneling_time_wide(double n0) {
    require_positive(n0, "n0");
    return 3.0 / n0;
}

double tunneling_time_wide_derived(double a, double n0, double sigma) {
    require_positive(n0, "n0");
    require_positive(sigma, "sigma");
    const double E = (n0 * a) * (n0 * a) / sigma;
    return tunneling_time(a, std::sqrt(sigma * E));
}

double bubble_speed_scaling(double a, double n0) { return n0 * a; }

double superluminal_threshold(double n0) {
    require_positive(n0, "n0");
    double a = 1.0 / n0;
    while (n0 * a > 1.0) a = std::nextafter(a, 0.0);
    while (n0 * std::nextafter(a, INFINITY) <= 1.0) a = std::nextafter(a, INFINITY);
    return a;
}

bool is_superluminal(double a, double n0) { return bubble_speed_scaling(a, n0) > 1.0; }

double proper_time_ratio(double v, double beta) {
    const double w = v - beta;
    const double s = 1.0 - w * w;
    return s < 0.0 ? std::nan("") : std::sqrt(s);
}

EulerianDiagnostics eulerian_diagnostics(double r_s, const BubbleParams& p, double h) {
    EulerianDiagnostics d;
    if (p.vs == 0.0) return d;
    const double f = bubble_profile(r_s, p);
    d.u = {1.0, -p.vs * f, 0.0, 0.0};
    const double df = (bubble_profile(r_s + h, p) - bubble_profile(r_s - h, p)) / (2.0 * h);
    d.theta = -p.vs * df;
    d.proper_time_ratio = proper_time_ratio(p.vs, p.vs * f);
    return d;
}

const char* to_string(SweepRegime r) {
    switch (r) {
        case SweepRegime::narrow: return "narrow";
        case SweepRegime::wide: return "wide";
        case SweepRegime::speed: return "speed";
    }
    return "?";
}

SweepRegime parse_sweep_regime(const char* s) {
    if (std::strcmp(s, "narrow") == 0) return SweepRegime::narrow;
    if (std::strcmp(s, "wide") == 0) return SweepRegime::wide;
    if (std::strcmp(s, "speed") == 0) return SweepRegime::speed;
    throw ModelError(ErrorKind::invalid_parameter, std::string("unknown regime: ") + s);
}

SweepRow sweep_row(SweepRegime r, double a, double driver, double sigma, double R) {
    SweepRow row;
    row.a = a;
    row.driver = driver;
    row.regime = classify_regime(a, R).regime;
    switch (r) {
        case SweepRegime::narrow:
            row.vs = std::sqrt(8.0 * driver / a);
            row.dt = tunneling_time(a, row.vs);
            break;
        case SweepRegime::wide:
            row.vs = std::sqrt(sigma * (driver * a) * (driver * a) / sigma);
            row.dt = tunneling_time_wide_derived(a, driver, sigma);
            break;
        case SweepRegime::speed:
            row.vs = bubble_speed_scaling(a, driver);
            row.dt = tunneling_time(a, row.vs);
            break;
    }
    return row;
}

std::vector<SweepRow> sweep(SweepRegime r, const std::vector<double>& a_values,
                            const std::vector<double>& driver_values, double sigma, double R) {
    return parallel::sweep(r, a_values, driver_values, sigma, R);
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw ModelError(ErrorKind::invalid_parameter, "linspace: n < 2");
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    v.back() = hi;
    return v;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace geobohm
