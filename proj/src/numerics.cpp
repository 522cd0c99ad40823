#include "geobohm/numerics.hpp"

#include <array>
#include <cmath>

namespace geobohm::numerics {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double kronrod;
    double gauss;
};

Panel gk15(const std::function<double(double)>& f, double a, double b, int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = fc * kWgk[7];
    double g = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        k += kWgk[j] * s;
        if (j % 2 == 1) g += kWg[j / 2] * s;
    }
    evals += 15;
    return {k * h, g * h};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             int depth, double whole, int& evals, double& err) {
    const double m = 0.5 * (a + b);
    const Panel l = gk15(f, a, m, evals);
    const Panel r = gk15(f, m, b, evals);
    const double sum = l.kronrod + r.kronrod;
    const double est = std::abs(l.kronrod - l.gauss) + std::abs(r.kronrod - r.gauss);
    if (depth <= 0 || (est <= tol && std::abs(sum - whole) <= 10.0 * tol)) {
        err += est;
        return sum;
    }
    return adapt(f, a, m, 0.5 * tol, depth - 1, l.kronrod, evals, err) +
           adapt(f, m, b, 0.5 * tol, depth - 1, r.kronrod, evals, err);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;
    const Panel whole = gk15(f, a, b, out.evaluations);
    out.value = adapt(f, a, b, abs_tol, max_depth, whole.kronrod, out.evaluations, out.error);
    return out;
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace geobohm::numerics
