#pragma once
#include <optional>

namespace geobohm {

enum class Dispersion { relativistic, nonrelativistic };

/// Barrier geometry, mode energies and wavenumbers, boundary times.
struct BarrierSpec {
    double a = 2.0;
    double V0 = 1.0;
    double E1 = 0.32;
    double E2 = 0.5;
    double k1 = 0.8;
    double k2 = 1.0;
    double A = 1.0;
    double B = 0.4;
    double t0 = 0.0;
    double t1 = 6.0;

    double deltaE() const { return E2 - E1; }
    double deltaK() const { return k2 - k1; }
};

/// Warp-bubble shape parameters.
struct BubbleParams {
    double sigma = 0.3;
    double R = 1.0;
    double vs = 1.0;
    double xs0 = 0.0;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
};

void validate(const BarrierSpec& spec);

// V0 on the closed interval [-a/2, a/2], zero outside.
double potential_V(double x, const BarrierSpec& spec);

BubbleParams derive_bubble(double sigma, double R, double vs, double xs0 = 0.0,
                           std::optional<double> alpha0 = std::nullopt,
                           std::optional<double> alpha1 = std::nullopt);

double dispersion(double k, Dispersion mode);

// Bubble centre x_s(t) = xs0 + vs t.
double bubble_center(const BubbleParams& p, double t);

}  // namespace geobohm
