#pragma once
#include <vector>

#include "geobohm/dynamics.hpp"
#include "geobohm/hartman.hpp"
#include "geobohm/params.hpp"

namespace geobohm {

struct PhaseRow {
    double r_s;
    double S_analytic;
    double S_quadrature;
    double abs_err;
};

struct TrajectoryJob {
    Region region;
    double x0;
};

// Same results from both namespaces, element for element; parallel:: uses OpenMP.
namespace serial {
std::vector<PhaseRow> phase_grid(const std::vector<double>& r_s, const BubbleParams& p,
                                 double abs_tol = 1e-12);
std::vector<SweepRow> sweep(SweepRegime r, const std::vector<double>& a_values,
                            const std::vector<double>& driver_values, double sigma, double R);
std::vector<TrajectoryResult> trajectories(const std::vector<TrajectoryJob>& jobs, double t_start,
                                           double t_end, int steps, const TrajectoryConstants& tc,
                                           RegionIIModel m);
Fig2Table fig2(const std::vector<double>& xs);
std::vector<double> bohm_potential(const std::vector<double>& rho, double dx);
}  // namespace serial

namespace parallel {
std::vector<PhaseRow> phase_grid(const std::vector<double>& r_s, const BubbleParams& p,
                                 double abs_tol = 1e-12);
std::vector<SweepRow> sweep(SweepRegime r, const std::vector<double>& a_values,
                            const std::vector<double>& driver_values, double sigma, double R);
std::vector<TrajectoryResult> trajectories(const std::vector<TrajectoryJob>& jobs, double t_start,
                                           double t_end, int steps, const TrajectoryConstants& tc,
                                           RegionIIModel m);
Fig2Table fig2(const std::vector<double>& xs);
std::vector<double> bohm_potential(const std::vector<double>& rho, double dx);
}  // namespace parallel

int thread_count();

}  // namespace geobohm
