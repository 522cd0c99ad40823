#pragma once
#include <array>
#include <vector>

#include "geobohm/params.hpp"
#include "geobohm/potential.hpp"

namespace geobohm {

// Boundary-subtraction tunneling time: the linear invariant sigma0 (x - vs t/3) is
// pinned at (-a/2, t0) and solved for t1 at x = a/2.
double tunneling_time(double a, double vs, double t0 = 0.0, double sigma0 = 0.0);
double tunneling_time_closed(double a, double vs);
double tunneling_time_narrow(double a, double E);
double tunneling_time_wide(double n0);
// E = (n0 a)^2 / sigma, vs = sqrt(sigma E), then the boundary procedure.
double tunneling_time_wide_derived(double a, double n0, double sigma);

double bubble_speed_scaling(double a, double n0);
double superluminal_threshold(double n0);
bool is_superluminal(double a, double n0);

struct EulerianDiagnostics {
    std::array<double, 4> u{};
    double theta = 0.0;
    double proper_time_ratio = 1.0;
};

// dtau/dt along dx/dt = v in a region with shift beta; NaN if spacelike.
double proper_time_ratio(double v, double beta);

// Comoving path (dx/dt = vs) at offset r_s from the bubble centre.
EulerianDiagnostics eulerian_diagnostics(double r_s, const BubbleParams& p, double h = 1e-5);

enum class SweepRegime { narrow, wide, speed };

const char* to_string(SweepRegime r);
SweepRegime parse_sweep_regime(const char* s);

struct SweepRow {
    double a = 0.0;
    double driver = 0.0;  // E for narrow, n0 otherwise
    double vs = 0.0;
    double dt = 0.0;
    Regime regime = Regime::narrow;
};

SweepRow sweep_row(SweepRegime r, double a, double driver, double sigma, double R);

// Row order: driver-major, a-minor.
std::vector<SweepRow> sweep(SweepRegime r, const std::vector<double>& a_values,
                            const std::vector<double>& driver_values, double sigma = 1e-3,
                            double R = 1.0);

std::vector<double> linspace(double lo, double hi, int n);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace geobohm
