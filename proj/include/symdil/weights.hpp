// ============================================================================
// weights.hpp -- parametric moderate weights on phase space R^{2d}
//
// Three families, z = (x, omega) with x, omega in R^d:
//
//   radial_log  m_{s,t}(z)     = (1+|z|)^s (ln(e+|z|))^t
//   spatial     p_s(x, omega)  = (1+|x|)^s,   s != 0
//   frequency   q_t(x, omega)  = (1+|omega|)^t,  t != 0
//
// Analytic equivalence m ~ m o S^{-1} (two-sided, constants independent of
// z) holds: always for radial_log; iff the B block of S vanishes for
// spatial; iff the C block vanishes for frequency.  The empirical estimator
// samples quasi-random shells and reports max/min of m(z)/m(S^{-1}z); it is
// exploratory only and never feeds a verdict.
// ============================================================================
#pragma once

#include <cstdint>
#include <vector>

#include "symdil/symplectic.hpp"

namespace symdil {

enum class WeightFamily { RadialLog, Spatial, Frequency };

struct WeightSpec {
    WeightFamily family = WeightFamily::RadialLog;
    double s = 0.0;
    double t = 0.0;
    int d = 1;
};

// validates the family-specific parameter constraints (spatial: s != 0,
// frequency: t != 0, d >= 1)
WeightSpec make_weight(WeightFamily family, double s, double t, int d);

double eval_weight(const WeightSpec& w, const Vec& z);

enum class Equivalence { Equivalent, NotEquivalent };

Equivalence equivalence_under(const WeightSpec& w, const SymplecticMatrix& S);

struct WeightRatioEstimate {
    double R_hat = 1.0;      // empirical sup of m(z)/m(S^{-1}z)
    double T_hat = 1.0;      // empirical inf of the same ratio
    long samples = 0;
    double max_radius = 0.0;
    std::vector<double> shell_radius;  // per-shell trend data
    std::vector<double> shell_max;
    std::vector<double> shell_min;
};

// quasi-random (additive-recurrence / Box-Muller) direction sampling on
// spheres of the given radii; deterministic for a fixed seed
WeightRatioEstimate estimate_Rm_Tm(const WeightSpec& w, const SymplecticMatrix& S,
                                   const std::vector<double>& radii,
                                   int samples_per_shell, std::uint64_t seed);

// default shells 2^j, j = 0..20
std::vector<double> default_shell_radii();

} // namespace symdil
