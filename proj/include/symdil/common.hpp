// ============================================================================
// common.hpp -- shared error types, tolerance configuration, log-space values
//
// Every numeric comparison in the library routes through the Tolerances
// struct below.  Defaults are chosen for double precision work on matrices
// of modest dimension (d <= 4 for exact linear algebra, grids up to n=1024).
// Each field can be overridden through an environment variable so that a
// user running on unusual inputs can loosen or tighten checks without a
// rebuild:
//
//   SYMDIL_TOL_VALIDATE   relative tolerance for structural matrix checks
//                         (symplectic identity, symmetry of Q/P, ...)
//   SYMDIL_TOL_RANK       pivot threshold used when testing invertibility
//                         of candidate upper-left blocks during factorization
//   SYMDIL_TOL_FIT        agreement tolerance between a fitted sweep slope
//                         and the predicted exponent
//   SYMDIL_TOL_SNAP       snapping tolerance (relative to the grid step) for
//                         deciding that a transformed grid point coincides
//                         with an existing sample
//
// Norms of dilated Gaussians can overflow or underflow double range long
// before the mathematics becomes uninteresting (the closed forms involve
// det(pSigma)^(-1/2p) with eps-dependent determinants), so quantities that
// can blow up are carried as NormValue: the log is authoritative and the
// linear value is exp(log), possibly 0 or inf.
// ============================================================================
#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace symdil {

// ----------------------------------------------------------------------------
// error taxonomy
// ----------------------------------------------------------------------------

// base class: anything thrown deliberately by this library
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed or inconsistent input (non-symplectic matrix, asymmetric Q, ...)
class ValidationError : public Error {
public:
    using Error::Error;
};

// a requested operation has no result for this input (e.g. a Gaussian
// integral whose quadratic form is not positive definite)
class DomainError : public Error {
public:
    using Error::Error;
};

// file / JSON / binary format problems
class FormatError : public Error {
public:
    using Error::Error;
};

// ----------------------------------------------------------------------------
// tolerances
// ----------------------------------------------------------------------------

struct Tolerances {
    double validate = 1e-9;  // relative, structural checks
    double rank     = 1e-9;  // relative, pivot/invertibility threshold
    double fit      = 0.02;  // absolute, sweep slope vs predicted exponent
    double snap     = 1e-9;  // relative to grid step, point coincidence
};

inline double env_override(const char* name, double fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || !(v > 0.0) || !std::isfinite(v))
        throw ValidationError(std::string(name) + ": expected a positive number, got '" + s + "'");
    return v;
}

// Read once per process; tests that need to exercise the overrides spawn the
// CLI as a subprocess instead of mutating the environment mid-run.
inline const Tolerances& tols() {
    static const Tolerances t = [] {
        Tolerances v;
        v.validate = env_override("SYMDIL_TOL_VALIDATE", v.validate);
        v.rank     = env_override("SYMDIL_TOL_RANK", v.rank);
        v.fit      = env_override("SYMDIL_TOL_FIT", v.fit);
        v.snap     = env_override("SYMDIL_TOL_SNAP", v.snap);
        return v;
    }();
    return t;
}

// ----------------------------------------------------------------------------
// log-space scalar
// ----------------------------------------------------------------------------

// A nonnegative quantity carried together with its natural log.  log_value is
// the authoritative field; value == exp(log_value) up to rounding and may be
// 0 or +inf when the quantity leaves double range.
struct NormValue {
    double value     = 1.0;
    double log_value = 0.0;

    static NormValue from_log(double lg) {
        return NormValue{std::exp(lg), lg};
    }
    static NormValue from_value(double v) {
        return NormValue{v, std::log(v)};
    }
    NormValue operator*(const NormValue& o) const {
        return from_log(log_value + o.log_value);
    }
    NormValue operator/(const NormValue& o) const {
        return from_log(log_value - o.log_value);
    }
};

} // namespace symdil
