// ============================================================================
// exponents.hpp -- Lebesgue exponents p, q in [1, inf], with inf distinct
//
// The convention a^(1/inf) := 1 (equivalently 1/inf := 0) shows up all over
// the closed-form norms, so infinity is a first-class value here rather than
// a large double.  half_inv(p) = 1/(2p) is the combination that actually
// appears in the exponent formulas.
// ============================================================================
#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "symdil/common.hpp"

namespace symdil {

struct Exponent {
    double v   = 2.0;   // meaningful only when !inf
    bool   inf = false;

    static Exponent finite(double p) {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw ValidationError("exponent must be a finite number >= 1 or inf");
        return Exponent{p, false};
    }
    static Exponent infinity() { return Exponent{0.0, true}; }

    bool operator==(const Exponent& o) const {
        if (inf != o.inf) return false;
        return inf || v == o.v;
    }

    // 1/p, with 1/inf = 0
    double reciprocal() const { return inf ? 0.0 : 1.0 / v; }
    // 1/(2p), with 1/(2*inf) = 0
    double half_inv() const { return inf ? 0.0 : 0.5 / v; }
};

struct ExponentPair {
    Exponent p, q;
    bool equal() const { return p == q; }
};

// Accepts "inf", "Inf", "INF", "infinity" or a decimal number >= 1.
inline Exponent parse_exponent(const std::string& s) {
    std::string low;
    for (char c : s) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low == "inf" || low == "infinity") return Exponent::infinity();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ValidationError("cannot parse exponent '" + s + "'");
    return Exponent::finite(v);
}

inline std::string to_string(const Exponent& e) {
    if (e.inf) return "inf";
    if (e.v == std::floor(e.v) && std::abs(e.v) < 1e15) {
        return std::to_string(static_cast<long long>(e.v));
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", e.v);
    return buf;
}

} // namespace symdil
