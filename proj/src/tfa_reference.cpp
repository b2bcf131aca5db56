// ============================================================================
// tfa_reference.cpp -- direct-summation implementations of the discrete
// time-frequency transforms.  Quadratic cost in the number of grid points:
// these exist as independent oracles for the fast kernels and as benchmark
// baselines, and are only meant for small grids.
// ============================================================================
#include <cmath>

#include "symdil/tfa.hpp"

namespace symdil {
namespace reference {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::size_t ipow(int n, int e) {
    std::size_t s = 1;
    for (int i = 0; i < e; ++i) s *= static_cast<std::size_t>(n);
    return s;
}

void decode(std::size_t lin, int n, int rank, int* idx) {
    for (int a = rank - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(lin % static_cast<std::size_t>(n));
        lin /= static_cast<std::size_t>(n);
    }
}

void check_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (a.d != b.d || a.n != b.n || a.T != b.T)
        throw ValidationError(std::string(what) + ": grid mismatch");
}

} // namespace

SampledField discrete_ambiguity(const SampledSignal& f,
                                const SampledSignal& g) {
    check_same_grid(f.g, g.g, "discrete_ambiguity");
    const GridSpec& gr = f.g;
    const int d = gr.d, n = gr.n, c = n / 2;
    const double alpha = gr.h() * gr.h();
    const double cell = std::pow(gr.h(), d);

    SampledField A = zero_field(gr);
    const std::size_t npts = ipow(n, d);
    std::vector<int> s(d), m(d), j(d), jg(d);

    for (std::size_t ls = 0; ls < npts; ++ls) {
        decode(ls, n, d, s.data());
        for (std::size_t lm = 0; lm < npts; ++lm) {
            decode(lm, n, d, m.data());
            cplx acc(0.0, 0.0);
            for (std::size_t lj = 0; lj < npts; ++lj) {
                decode(lj, n, d, j.data());
                bool ok = true;
                double ph = 0.0;
                for (int a = 0; a < d; ++a) {
                    jg[a] = j[a] - s[a] + c;
                    if (jg[a] < 0 || jg[a] >= n) { ok = false; break; }
                    ph += static_cast<double>(j[a] - c) * (m[a] - c);
                }
                if (!ok) continue;
                std::size_t lg = 0;
                for (int a = 0; a < d; ++a)
                    lg = lg * n + static_cast<std::size_t>(jg[a]);
                acc += f.v[lj] * std::conj(g.v[lg]) *
                       std::polar(1.0, -2.0 * kPi * alpha * ph);
            }
            double half = 0.0;
            for (int a = 0; a < d; ++a)
                half += static_cast<double>(s[a] - c) * (m[a] - c);
            A.v[ls * npts + lm] =
                acc * std::polar(cell, kPi * alpha * half);
        }
    }
    return A;
}

SampledField twisted_convolution(const SampledField& F,
                                 const SampledField& G) {
    check_same_grid(F.g, G.g, "twisted_convolution");
    const GridSpec& gr = F.g;
    const int d = gr.d, n = gr.n, c = n / 2, rank = 2 * d;
    const double alpha = gr.h() * gr.h();
    const double cell = std::pow(gr.h(), rank);

    SampledField H = zero_field(gr);
    const std::size_t total = ipow(n, rank);
    std::vector<int> lam(rank), gam(rank), diff(rank);

    for (std::size_t lo = 0; lo < total; ++lo) {
        decode(lo, n, rank, lam.data());
        cplx acc(0.0, 0.0);
        for (std::size_t lg = 0; lg < total; ++lg) {
            decode(lg, n, rank, gam.data());
            bool ok = true;
            for (int a = 0; a < rank; ++a) {
                diff[a] = lam[a] - gam[a] + c;
                if (diff[a] < 0 || diff[a] >= n) { ok = false; break; }
            }
            if (!ok) continue;
            std::size_t ld = 0;
            for (int a = 0; a < rank; ++a)
                ld = ld * n + static_cast<std::size_t>(diff[a]);
            // [gamma, lambda] = x.b - a.w with gamma=(a,b), lambda=(x,w)
            double form = 0.0;
            for (int a = 0; a < d; ++a) {
                form += static_cast<double>(lam[a] - c) * (gam[d + a] - c);
                form -= static_cast<double>(gam[a] - c) * (lam[d + a] - c);
            }
            acc += F.v[lg] * G.v[ld] * std::polar(1.0, kPi * alpha * form);
        }
        H.v[lo] = acc * cell;
    }
    return H;
}

SampledSignal reconstruct_from_field(const SampledField& E,
                                     const SampledSignal& g) {
    if (E.g.d != g.g.d || E.g.n != g.g.n || E.g.T != g.g.T)
        throw ValidationError("reconstruct_from_field: grid mismatch");
    const GridSpec& gr = g.g;
    const int d = gr.d, n = gr.n, c = n / 2;
    const double alpha = gr.h() * gr.h();
    const double cell = std::pow(gr.h(), 2 * d);

    SampledSignal h = zero_signal(gr);
    const std::size_t npts = ipow(n, d);
    std::vector<int> j(d), s(d), m(d), jg(d);

    for (std::size_t lj = 0; lj < npts; ++lj) {
        decode(lj, n, d, j.data());
        cplx acc(0.0, 0.0);
        for (std::size_t ls = 0; ls < npts; ++ls) {
            decode(ls, n, d, s.data());
            bool ok = true;
            for (int a = 0; a < d; ++a) {
                jg[a] = j[a] - s[a] + c;
                if (jg[a] < 0 || jg[a] >= n) { ok = false; break; }
            }
            if (!ok) continue;
            std::size_t lg = 0;
            for (int a = 0; a < d; ++a)
                lg = lg * n + static_cast<std::size_t>(jg[a]);
            for (std::size_t lm = 0; lm < npts; ++lm) {
                decode(lm, n, d, m.data());
                double ws = 0.0, wt = 0.0;
                for (int a = 0; a < d; ++a) {
                    ws += static_cast<double>(m[a] - c) * (s[a] - c);
                    wt += static_cast<double>(m[a] - c) * (j[a] - c);
                }
                acc += E.v[ls * npts + lm] * g.v[lg] *
                       std::polar(1.0, kPi * alpha * (2.0 * wt - ws));
            }
        }
        h.v[lj] = acc * cell;
    }
    return h;
}

} // namespace reference
} // namespace symdil
