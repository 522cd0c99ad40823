#pragma once
#include <array>
#include <complex>

#include "geobohm/params.hpp"
#include "geobohm/phase.hpp"

namespace geobohm {

// Time at which the right-boundary quantities are evaluated.
enum class RightBoundaryTime { t1, t0 };

/// Boundary values, 1-based: zeta[1..6], zetaPrime[1..6]; index 0 unused.
struct ZetaTerms {
    std::array<cd, 7> zeta{};
    std::array<cd, 7> zetaPrime{};
    double t_left = 0.0;
    double t_right = 0.0;
};

/// Solved coefficients; varpi is 1-based, index 0 unused.
struct MatchCoefficients {
    std::array<cd, 7> zeta{};
    std::array<cd, 7> zetaPrime{};
    std::array<cd, 5> varpi{};
    cd cI1, cI2, cII1, cII2, cIII1, cIII2;
    double t_left = 0.0;
    double t_right = 0.0;
};

ZetaTerms zeta_terms(const BarrierSpec& spec, const BubbleParams& p,
                     RightBoundaryTime rt = RightBoundaryTime::t1);

MatchCoefficients solve_coefficients(const BarrierSpec& spec, const ZetaTerms& z, cd cIII1 = 1.0);

// Relative residuals of the four continuity equations.
std::array<double, 4> matching_residuals(const MatchCoefficients& c, const BarrierSpec& spec);

struct Transmission {
    cd T;
    double modulus;
};

Transmission transmission(cd cIII1, cd varpi1, double deltaE, double t1, double Xi);

// Same expression with the solved ratio cIII2/cIII1 in place of varpi1 e^{i dE t1}.
Transmission transmission_from(const MatchCoefficients& c, double Xi);

cd wavefunction(double x, double t, const MatchCoefficients& c, const BarrierSpec& spec,
                const BubbleParams& p);

}  // namespace geobohm
