#pragma once
#include <array>
#include <functional>

#include "geobohm/params.hpp"

namespace geobohm {

/// Metric components, index order (t, x, y, z).
struct MetricTensor {
    std::array<std::array<double, 4>, 4> g{};

    static MetricTensor minkowski();
    double det() const;
};

using MetricField = std::function<MetricTensor(double t, double x)>;

/// Gamma^mu_{alpha beta}, stored as gamma[mu][alpha][beta].
struct ChristoffelSet {
    std::array<std::array<std::array<double, 4>, 4>, 4> gamma{};
};

double bubble_profile(double r_s, const BubbleParams& p);

// Shift vs*f(r_s) = alpha0/(1 + alpha1 cosh(2 sigma r_s)); zero when vs = 0.
double shift(double r_s, const BubbleParams& p);
double shift_dr(double r_s, const BubbleParams& p);

MetricTensor alcubierre_metric(double t, double x, const BubbleParams& p);
MetricTensor alcubierre_inverse(double t, double x, const BubbleParams& p);

MetricTensor region_metric(double Q);
MetricTensor region_inverse(double Q);

MetricTensor inverse(const MetricTensor& m);
MetricTensor multiply(const MetricTensor& a, const MetricTensor& b);

MetricField alcubierre_field(const BubbleParams& p);
MetricField region_field(double Q);

// Central differences in t and x; y and z derivatives vanish.
ChristoffelSet christoffel(const MetricField& field, double t, double x, double h = 1e-5,
                           bool richardson = false);

double geodesic_constraint_residual(const std::array<double, 4>& velocity,
                                    const ChristoffelSet& gamma);

using ScalarField = std::function<double(double t, double x)>;

std::array<double, 3> field_equation_residuals(const MetricField& field, const ScalarField& dS,
                                     const ScalarField& dQ, double t, double x,
                                     double h = 1e-5);

double bubble_radius(double sigma, double alpha1);

}  // namespace geobohm
