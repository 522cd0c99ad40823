#include "geobohm/kernels.hpp"

#include <cmath>
#include <exception>

#include "geobohm/phase.hpp"
#include "geobohm/potential.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geobohm {

namespace {

PhaseRow phase_row(double r, const BubbleParams& p, const PhaseConstants& pc, double tol) {
    const double s = phase_II(r, 0.0, p, pc);
    const double q = phase_II_quadrature(0.0, r, p, tol);
    return {r, s, q, std::abs(s - q)};
}

std::vector<double> fig2_row(double x) {
    static const Fig2Family fams[] = {Fig2Family::incident, Fig2Family::reflected, Fig2Family::tunneling,
                                      Fig2Family::transmitted};
    std::vector<double> row;
    row.reserve(19);
    row.push_back(x);
    for (auto f : fams)
        for (double rho : fig2_rho_values(f)) row.push_back(fig2_value(f, x, rho));
    return row;
}

// Runs body(i) for i in [0, n) and rethrows the first exception after the loop.
template <class F>
void parallel_for(std::size_t n, F&& body) {
    std::exception_ptr err;
    const long long m = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < m; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace

namespace serial {

std::vector<PhaseRow> phase_grid(const std::vector<double>& r_s, const BubbleParams& p, double abs_tol) {
    const PhaseConstants pc = phase_constants(p.alpha0, p.alpha1);
    std::vector<PhaseRow> out;
    out.reserve(r_s.size());
    for (double r : r_s) out.push_back(phase_row(r, p, pc, abs_tol));
    return out;
}

std::vector<SweepRow> sweep(SweepRegime r, const std::vector<double>& a_values,
                            const std::vector<double>& driver_values, double sigma, double R) {
    std::vector<SweepRow> out;
    out.reserve(a_values.size() * driver_values.size());
    for (double d : driver_values)
        for (double a : a_values) out.push_back(sweep_row(r, a, d, sigma, R));
    return out;
}

std::vector<TrajectoryResult> trajectories(const std::vector<TrajectoryJob>& jobs, double t_start,
                                           double t_end, int steps, const TrajectoryConstants& tc,
                                           RegionIIModel m) {
    std::vector<TrajectoryResult> out;
    out.reserve(jobs.size());
    for (const auto& j : jobs) out.push_back(integrate_trajectory(j.region, j.x0, t_start, t_end, steps, tc, m));
    return out;
}

Fig2Table fig2(const std::vector<double>& xs) { return fig2_dataset(xs); }

std::vector<double> bohm_potential(const std::vector<double>& rho, double dx) {
    return bohm_potential_generic(rho, dx);
}

}  // namespace serial

namespace parallel {

std::vector<PhaseRow> phase_grid(const std::vector<double>& r_s, const BubbleParams& p, double abs_tol) {
    const PhaseConstants pc = phase_constants(p.alpha0, p.alpha1);
    std::vector<PhaseRow> out(r_s.size());
    parallel_for(r_s.size(), [&](std::size_t i) { out[i] = phase_row(r_s[i], p, pc, abs_tol); });
    return out;
}

std::vector<SweepRow> sweep(SweepRegime r, const std::vector<double>& a_values,
                            const std::vector<double>& driver_values, double sigma, double R) {
    const std::size_t na = a_values.size();
    std::vector<SweepRow> out(na * driver_values.size());
    parallel_for(out.size(), [&](std::size_t i) {
        out[i] = sweep_row(r, a_values[i % na], driver_values[i / na], sigma, R);
    });
    return out;
}

std::vector<TrajectoryResult> trajectories(const std::vector<TrajectoryJob>& jobs, double t_start,
                                           double t_end, int steps, const TrajectoryConstants& tc,
                                           RegionIIModel m) {
    std::vector<TrajectoryResult> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        out[i] = integrate_trajectory(jobs[i].region, jobs[i].x0, t_start, t_end, steps, tc, m);
    });
    return out;
}

Fig2Table fig2(const std::vector<double>& xs) {
    Fig2Table t;
    t.columns = fig2_dataset({}).columns;
    t.rows.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { t.rows[i] = fig2_row(xs[i]); });
    return t;
}

std::vector<double> bohm_potential(const std::vector<double>& rho, double dx) {
    const std::size_t n = rho.size();
    // small inputs and all validation go through the serial path
    if (n < 4) return bohm_potential_generic(rho, dx);
    for (double r : rho)
        if (!(r > 0.0)) return bohm_potential_generic(rho, dx);
    if (!(dx > 0.0)) return bohm_potential_generic(rho, dx);
    std::vector<double> a(n), q(n);
    parallel_for(n, [&](std::size_t i) { a[i] = std::sqrt(rho[i]); });
    const double h2 = dx * dx;
    parallel_for(n - 2, [&](std::size_t j) {
        const std::size_t i = j + 1;
        q[i] = -0.5 * (a[i - 1] - 2.0 * a[i] + a[i + 1]) / h2 / a[i];
    });
    q[0] = -0.5 * (2.0 * a[0] - 5.0 * a[1] + 4.0 * a[2] - a[3]) / h2 / a[0];
    q[n - 1] = -0.5 * (2.0 * a[n - 1] - 5.0 * a[n - 2] + 4.0 * a[n - 3] - a[n - 4]) / h2 / a[n - 1];
    return q;
}

}  // namespace parallel

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace geobohm
