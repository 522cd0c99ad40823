#pragma once
#include <complex>
#include <vector>

#include "geobohm/params.hpp"

namespace geobohm {

using cd = std::complex<double>;

/// Constants of the region-II phase integral.
/// mu0, mu1 are the roots in z^2 of z^4 + 2 beta3 z^2 + beta2.
struct PhaseConstants {
    cd beta0, beta1, beta2, beta3;
    cd mu0, mu1;
    cd root;  // sqrt(beta3^2 - beta2), principal
};

PhaseConstants phase_constants(double alpha0, double alpha1);

double x_prime(double r_s, double sigma);

// Closed form on r_s >= 0 as a function of x' (even in r_s), complex.
cd phase_II_halfline(double r_s, const BubbleParams& p, const PhaseConstants& pc);

// S_II(r_s) with S_II(0) = 0, continued as an odd function of r_s.
double phase_II(double x, double x_s, const BubbleParams& p);
double phase_II(double x, double x_s, const BubbleParams& p, const PhaseConstants& pc);

// dS_II/dr_s = -2 vs f/(1 - vs^2 f^2).
double phase_II_slope(double r_s, const BubbleParams& p);

double phase_II_quadrature(double r_a, double r_b, const BubbleParams& p, double abs_tol = 1e-10);

enum class AmplitudeConvention {
    real_ratio,         // tan S_I = (A - B) tan(theta)/(A + B)
    literal_imaginary,  // B-cal = i(A - B) kept complex, real part asserted
};

double phase_I(double x, double t, const BarrierSpec& spec, int mode,
               AmplitudeConvention conv = AmplitudeConvention::real_ratio);
double sqrt_rho_I(double x, double t, const BarrierSpec& spec, int mode);
double phase_III(double x, double t, const BarrierSpec& spec, int mode);

struct Component {
    double C;
    double sqrt_rho;
    double S;
};

struct Superposed {
    double S;  // NaN when the total amplitude vanishes
    double sqrt_rho;
    bool phase_defined;
};

Superposed superposed_phase_density(const std::vector<Component>& components);

}  // namespace geobohm
