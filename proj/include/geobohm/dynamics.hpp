#pragma once
#include <array>
#include <string>
#include <vector>

#include "geobohm/matching.hpp"
#include "geobohm/params.hpp"
#include "geobohm/phase.hpp"

namespace geobohm {

enum class Region { I, II, III };

const char* to_string(Region r);

/// Two-mode guidance constants for region I or III.
/// Xi = kappa x - omega t + phi; dx/dt = p (1 + th4 cos Xi)/(th1 (1 + th2 cos Xi)).
struct WaveConstants {
    double C1 = 0.0, C2 = 0.0;  // moduli
    double k1 = 0.0, k2 = 0.0;
    double th1 = 0.0, th2 = 0.0, th3 = 0.0, th4 = 0.0;
    double p = 0.0;  // th3 scaled by B-cal/A-cal in region I, th3 in region III
    double kappa = 0.0, omega = 0.0, phi = 0.0;
    double th9 = 0.0, th10 = 0.0, th11 = 0.0, th12 = 0.0;
    std::array<double, 3> sigma{};
    bool unit_th12 = false;
};

struct TrajectoryConstants {
    std::array<double, 13> theta{};    // theta[1..12], region I
    double theta3Prime = 0.0;
    std::array<double, 13> thetaP{};   // thetaP[5..8] and primed thetaP[9..12], region III
    std::array<double, 3> sigmaI{};
    std::array<double, 3> sigmaIII{};
    WaveConstants I, III;

    double iota0 = 0.0;
    std::array<double, 6> iota{};             // iota[1..5]
    std::array<double, 7> iotaPrime{};        // iotaPrime[1..6]
    std::array<double, 7> iotaDoublePrime{};  // iotaDoublePrime[1..6]
    std::array<double, 2> sigmaII{};

    // reduced region-II drift: dx/dt = vs + 1/(d0 + 2 sigma^2 d1 r_s^2)
    double v0 = 0.0;
    double drift0 = 0.0;
    double drift1 = 0.0;

    BubbleParams bubble;
};

WaveConstants wave_constants(double C1, double C2, double k1, double k2, double ratio,
                             double kappa, double omega, double phi);

// Region-II constants only; wave regions left zero.
void fill_region_II(TrajectoryConstants& tc, const BubbleParams& p);

TrajectoryConstants trajectory_constants(const MatchCoefficients& c, const BarrierSpec& spec,
                                         const BubbleParams& p);

// Real mode amplitudes; phases enter through phiI and phiIII.
TrajectoryConstants trajectory_constants(double cI1, double cI2, double cIII1, double cIII2,
                                         const BarrierSpec& spec, const BubbleParams& p,
                                         double phiI = 0.0, double phiIII = 0.0);

double xi(const WaveConstants& w, double x, double t);
double wave_momentum(const WaveConstants& w, double x, double t);
double momentum_I(double x, double t, const TrajectoryConstants& tc);
double momentum_III(double x, double t, const TrajectoryConstants& tc);
double momentum_II(double x, double t, const BubbleParams& p, const PhaseConstants& pc);

// U(Xi) from the sigma coefficients, continuous across Xi = pi (mod 2 pi).
double phase_integral(const WaveConstants& w, double Xi);

enum class RegionIIModel { reduced, full };

double velocity_II_full(double r_s, const TrajectoryConstants& tc);
double velocity(Region r, double x, double t, const TrajectoryConstants& tc,
                RegionIIModel m = RegionIIModel::reduced);

double implicit_invariant(Region r, double x, double t, const TrajectoryConstants& tc,
                          RegionIIModel m = RegionIIModel::reduced);

struct TrajectorySample {
    double t;
    double x;
    Region region;
    double momentum;
    double invariant_value;
};

struct TrajectoryResult {
    std::vector<TrajectorySample> samples;
    bool halted = false;
    std::string message;
};

TrajectoryResult integrate_trajectory(Region r, double x0, double t_start, double t_end, int steps,
                                      const TrajectoryConstants& tc,
                                      RegionIIModel m = RegionIIModel::reduced);

enum class Fig2Family { incident, reflected, tunneling, transmitted };

const char* to_string(Fig2Family f);
const std::vector<double>& fig2_rho_values(Fig2Family f);
double fig2_value(Fig2Family f, double x, double rho);

struct Fig2Table {
    std::vector<std::string> columns;  // "x" then one per (family, rho)
    std::vector<std::vector<double>> rows;
};

Fig2Table fig2_dataset(const std::vector<double>& xs);

}  // namespace geobohm
