#pragma once
#include <functional>

namespace geobohm::numerics {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 with interval bisection.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10, int max_depth = 60);

double central_diff(const std::function<double(double)>& f, double x, double h);

// One classical RK4 step for dx/dt = f(t, x).
template <class F>
double rk4_step(F&& f, double t, double x, double h) {
    const double k1 = f(t, x);
    const double k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
    const double k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
    const double k4 = f(t + h, x + h * k3);
    return x + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
}

}  // namespace geobohm::numerics
