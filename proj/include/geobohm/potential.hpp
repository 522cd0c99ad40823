#pragma once
#include <vector>

#include "geobohm/params.hpp"

namespace geobohm {

enum class Regime { narrow, wide, intermediate };

struct EnergyRegime {
    Regime regime;
    double a;
    double R;
};

const char* to_string(Regime r);

EnergyRegime classify_regime(double a, double R);

double quantum_potential_II_of_shift(double beta);
double quantum_potential_II(double x, double t, const BubbleParams& p);

// |central difference of Q_II in f minus vs/(1 - vs^2 f^2) - vs^2 f|.
double dQ_consistency(double x, const BubbleParams& p, double t = 0.0, double h = 1e-6);

double quantum_potential_region(double g00, int sign);

std::vector<double> bohm_potential_generic(const std::vector<double>& rho, double dx);

double distortion_energy(double a, const BubbleParams& p, double x_s, double abs_tol = 1e-10);
double energy_narrow(double a, double vs);
double energy_wide(double vs, double sigma);

struct FApproximations {
    double inner;
    double outer;
    double exact;
};

FApproximations f_approximations(double r_s, const BubbleParams& p);

}  // namespace geobohm
