#include "geobohm/metric.hpp"

#include <cmath>
#include <sstream>

#include "geobohm/error.hpp"

namespace geobohm {

MetricTensor MetricTensor::minkowski() {
    MetricTensor m;
    m.g[0][0] = -1.0;
    m.g[1][1] = m.g[2][2] = m.g[3][3] = 1.0;
    return m;
}

double MetricTensor::det() const {
    auto a = g;
    double d = 1.0;
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (a[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int r = c + 1; r < 4; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

double bubble_profile(double r_s, const BubbleParams& p) {
    if (p.vs == 0.0) throw ModelError(ErrorKind::invalid_parameter, "bubble_profile: vs = 0");
    return p.alpha0 / (p.vs * (1.0 + p.alpha1 * std::cosh(2.0 * p.sigma * r_s)));
}

double shift(double r_s, const BubbleParams& p) {
    if (p.vs == 0.0) return 0.0;
    return p.alpha0 / (1.0 + p.alpha1 * std::cosh(2.0 * p.sigma * r_s));
}

double shift_dr(double r_s, const BubbleParams& p) {
    if (p.vs == 0.0) return 0.0;
    const double u = 2.0 * p.sigma * r_s;
    const double d = 1.0 + p.alpha1 * std::cosh(u);
    return -p.alpha0 * p.alpha1 * 2.0 * p.sigma * std::sinh(u) / (d * d);
}

MetricTensor alcubierre_metric(double t, double x, const BubbleParams& p) {
    const double b = shift(x - bubble_center(p, t), p);
    MetricTensor m = MetricTensor::minkowski();
    m.g[0][0] = b * b - 1.0;
    m.g[0][1] = m.g[1][0] = -b;
    return m;
}

MetricTensor alcubierre_inverse(double t, double x, const BubbleParams& p) {
    const double b = shift(x - bubble_center(p, t), p);
    MetricTensor m = MetricTensor::minkowski();
    m.g[0][1] = m.g[1][0] = -b;
    m.g[1][1] = 1.0 - b * b;
    return m;
}

MetricTensor region_metric(double Q) {
    if (!(Q > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "region_metric: Q must be positive");
    MetricTensor m = MetricTensor::minkowski();
    m.g[0][0] = -std::cbrt(9.0 * Q * Q);
    return m;
}

MetricTensor region_inverse(double Q) {
    if (!(Q > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "region_inverse: Q must be positive");
    MetricTensor m = MetricTensor::minkowski();
    m.g[0][0] = -1.0 / std::cbrt(9.0 * Q * Q);
    return m;
}

MetricTensor inverse(const MetricTensor& m) {
    auto a = m.g;
    MetricTensor inv;
    for (int i = 0; i < 4; ++i) inv.g[i][i] = 1.0;
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) < 1e-300)
            throw ModelError(ErrorKind::singular_metric, "metric is not invertible");
        std::swap(a[piv], a[c]);
        std::swap(inv.g[piv], inv.g[c]);
        const double d = a[c][c];
        for (int k = 0; k < 4; ++k) {
            a[c][k] /= d;
            inv.g[c][k] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == c) continue;
            const double f = a[r][c];
            for (int k = 0; k < 4; ++k) {
                a[r][k] -= f * a[c][k];
                inv.g[r][k] -= f * inv.g[c][k];
            }
        }
    }
    return inv;
}

MetricTensor multiply(const MetricTensor& a, const MetricTensor& b) {
    MetricTensor c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a.g[i][k] * b.g[k][j];
            c.g[i][j] = s;
        }
    return c;
}

MetricField alcubierre_field(const BubbleParams& p) {
    return [p](double t, double x) { return alcubierre_metric(t, x, p); };
}

MetricField region_field(double Q) {
    const MetricTensor m = region_metric(Q);
    return [m](double, double) { return m; };
}

namespace {

using Deriv = std::array<MetricTensor, 4>;

Deriv metric_derivatives(const MetricField& field, double t, double x, double h) {
    Deriv d{};
    const MetricTensor tp = field(t + h, x), tm = field(t - h, x);
    const MetricTensor xp = field(t, x + h), xm = field(t, x - h);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            d[0].g[i][j] = (tp.g[i][j] - tm.g[i][j]) / (2.0 * h);
            d[1].g[i][j] = (xp.g[i][j] - xm.g[i][j]) / (2.0 * h);
        }
    return d;
}

ChristoffelSet assemble(const MetricTensor& ginv, const Deriv& dg) {
    ChristoffelSet out;
    for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                double s = 0.0;
                for (int nu = 0; nu < 4; ++nu)
                    s += ginv.g[mu][nu] * (dg[a].g[nu][b] + dg[b].g[nu][a] - dg[nu].g[a][b]);
                out.gamma[mu][a][b] = out.gamma[mu][b][a] = 0.5 * s;
            }
    return out;
}

}  // namespace

ChristoffelSet christoffel(const MetricField& field, double t, double x, double h, bool richardson) {
    if (!(h > 0.0)) throw ModelError(ErrorKind::invalid_parameter, "christoffel: h must be positive");
    const MetricTensor ginv = inverse(field(t, x));
    ChristoffelSet c = assemble(ginv, metric_derivatives(field, t, x, h));
    if (!richardson) return c;
    const ChristoffelSet c2 = assemble(ginv, metric_derivatives(field, t, x, 0.5 * h));
    for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                c.gamma[mu][a][b] = (4.0 * c2.gamma[mu][a][b] - c.gamma[mu][a][b]) / 3.0;
    return c;
}

double geodesic_constraint_residual(const std::array<double, 4>& u, const ChristoffelSet& gamma) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) s += gamma.gamma[0][a][b] * u[a] * u[b];
    return s;
}

std::array<double, 3> field_equation_residuals(const MetricField& field, const ScalarField& dS,
                                     const ScalarField& dQ, double t, double x, double h) {
    const MetricTensor g = field(t, x);
    const MetricTensor gi = inverse(g);
    const Deriv d = metric_derivatives(field, t, x, h);
    const double absdet = std::abs(g.det());
    const double rdet = std::sqrt(absdet);
    const double Sx = dS(t, x);
    const double Qx = dQ(t, x);
    const double g10 = gi.g[1][0], g11 = gi.g[1][1];
    const double d0g00 = d[0].g[0][0], d1g00 = d[1].g[0][0];
    const double d0g10 = d[0].g[1][0], d1g01 = d[1].g[0][1];

    std::array<double, 3> r{};
    r[0] = 0.5 * g10 * d0g00 + 0.5 * g11 * (2.0 * d0g10 - d1g00) - g11 * Qx / rdet;
    r[1] = g10 * d1g00 * Sx / rdet;
    r[2] = g10 * (2.0 * d1g01) * g11 * g11 * Sx * Sx / (2.0 * absdet) -
           g10 * d1g00 * g11 * Sx / rdet;
    return r;
}

double bubble_radius(double sigma, double alpha1) {
    return std::sqrt(1.0 + alpha1) / (2.0 * sigma * std::sqrt(alpha1));
}

}  // namespace geobohm
