#include "symdil/weights.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace symdil {

WeightSpec make_weight(WeightFamily family, double s, double t, int d) {
    if (d < 1) throw ValidationError("make_weight: d must be positive");
    if (family == WeightFamily::Spatial && s == 0.0)
        throw ValidationError("make_weight: spatial family requires s != 0");
    if (family == WeightFamily::Frequency && t == 0.0)
        throw ValidationError("make_weight: frequency family requires t != 0");
    if (!std::isfinite(s) || !std::isfinite(t))
        throw ValidationError("make_weight: parameters must be finite");
    return WeightSpec{family, s, t, d};
}

double eval_weight(const WeightSpec& w, const Vec& z) {
    if (z.size() != 2 * w.d)
        throw ValidationError("eval_weight: point must lie in R^{2d}");
    switch (w.family) {
        case WeightFamily::RadialLog: {
            const double r = z.norm();
            return std::pow(1.0 + r, w.s) * std::pow(std::log(std::numbers::e + r), w.t);
        }
        case WeightFamily::Spatial: {
            const double r = z.head(w.d).norm();
            return std::pow(1.0 + r, w.s);
        }
        case WeightFamily::Frequency: {
            const double r = z.tail(w.d).norm();
            return std::pow(1.0 + r, w.t);
        }
    }
    throw Error("eval_weight: unreachable");
}

Equivalence equivalence_under(const WeightSpec& w, const SymplecticMatrix& S) {
    if (w.d != S.d) throw ValidationError("equivalence_under: dimension mismatch");
    const double scale = std::max(1.0, S.m.cwiseAbs().maxCoeff());
    const double tol = tols().validate * scale;
    switch (w.family) {
        case WeightFamily::RadialLog:
            return Equivalence::Equivalent;
        case WeightFamily::Spatial:
            return S.B().cwiseAbs().maxCoeff() <= tol ? Equivalence::Equivalent
                                                      : Equivalence::NotEquivalent;
        case WeightFamily::Frequency:
            return S.C().cwiseAbs().maxCoeff() <= tol ? Equivalence::Equivalent
                                                      : Equivalence::NotEquivalent;
    }
    throw Error("equivalence_under: unreachable");
}

namespace {

// additive-recurrence low-discrepancy point in [0,1)^m, then Box-Muller to
// a Gaussian vector, then normalized to the sphere.  Deterministic in
// (seed, shell, sample).
Vec sphere_point(int m, std::uint64_t seed, int shell, int sample) {
    static const double primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    const double offset = std::fmod(
        0.5 + 0.6180339887498949 * static_cast<double>(seed + 977 * shell), 1.0);
    Vec u(m);
    for (int j = 0; j < m; ++j) {
        const double alpha = std::sqrt(primes[j % 20]) + static_cast<double>(j / 20);
        double v = std::fmod(offset + (sample + 1) * std::fmod(alpha, 1.0), 1.0);
        // keep away from 0 where log() blows up
        u(j) = std::min(std::max(v, 1e-12), 1.0 - 1e-12);
    }
    Vec g(m);
    for (int j = 0; j + 1 < m; j += 2) {
        const double r = std::sqrt(-2.0 * std::log(u(j)));
        const double th = 2.0 * std::numbers::pi * u(j + 1);
        g(j) = r * std::cos(th);
        g(j + 1) = r * std::sin(th);
    }
    if (m % 2 == 1) g(m - 1) = std::sqrt(-2.0 * std::log(u(m - 1)));
    const double nrm = g.norm();
    return nrm > 0 ? Vec(g / nrm) : Vec(Vec::Unit(m, 0));
}

} // namespace

WeightRatioEstimate estimate_Rm_Tm(const WeightSpec& w, const SymplecticMatrix& S,
                                   const std::vector<double>& radii,
                                   int samples_per_shell, std::uint64_t seed) {
    if (radii.empty()) throw ValidationError("estimate_Rm_Tm: radii must be nonempty");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw ValidationError("estimate_Rm_Tm: radii must be strictly increasing");
    if (samples_per_shell < 1)
        throw ValidationError("estimate_Rm_Tm: samples_per_shell must be >= 1");

    const SymplecticMatrix Sinv = invert_symplectic(S);
    const int m = 2 * w.d;

    WeightRatioEstimate est;
    est.R_hat = 0.0;
    est.T_hat = std::numeric_limits<double>::infinity();
    for (int shell = 0; shell < static_cast<int>(radii.size()); ++shell) {
        double smax = 0.0, smin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < samples_per_shell; ++i) {
            const Vec z = radii[shell] * sphere_point(m, seed, shell, i);
            const double ratio = eval_weight(w, z) / eval_weight(w, Sinv.m * z);
            smax = std::max(smax, ratio);
            smin = std::min(smin, ratio);
        }
        est.shell_radius.push_back(radii[shell]);
        est.shell_max.push_back(smax);
        est.shell_min.push_back(smin);
        est.R_hat = std::max(est.R_hat, smax);
        est.T_hat = std::min(est.T_hat, smin);
        est.samples += samples_per_shell;
    }
    est.max_radius = radii.back();
    return est;
}

std::vector<double> default_shell_radii() {
    std::vector<double> r;
    for (int j = 0; j <= 20; ++j) r.push_back(std::ldexp(1.0, j));
    return r;
}

} // namespace symdil
