// ============================================================================
// tfa_parallel.cpp -- fast kernels for the discrete time-frequency engine.
//
// discrete_ambiguity   one centered fractional DFT per spatial row
//                      (Bluestein), O(N^2 log n) instead of O(N^2 n^d)
// twisted_convolution  d=1: per-output-frequency FFT convolutions against
//                      cached spectra of the second factor's spatial rows;
//                      d=2 falls back to the direct sum
// reconstruct_from_field  one inverse fractional DFT per spatial row plus
//                      a banded accumulation
//
// All kernels compute exactly the sums in tfa_reference.cpp (up to rounding)
// and parallelize over independent output rows with OpenMP when available.
// ============================================================================
#include <cmath>

#include "symdil/tfa.hpp"

namespace symdil {

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

namespace detail {

void frac_dft_axis(cvec& data, int n, int rank, int axis, double alpha,
                   int sigma) {
    const std::size_t stride = ipow(n, rank - 1 - axis);
    const std::size_t inner = stride;                 // faster axes
    const std::size_t outer = ipow(n, axis);          // slower axes
    cvec line(static_cast<std::size_t>(n));
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < inner; ++i) {
            const std::size_t base =
                o * static_cast<std::size_t>(n) * stride + i;
            for (int j = 0; j < n; ++j)
                line[static_cast<std::size_t>(j)] = data[base + j * stride];
            line = frac_dft_centered(line, alpha, sigma);
            for (int j = 0; j < n; ++j)
                data[base + j * stride] = line[static_cast<std::size_t>(j)];
        }
    }
}

} // namespace detail

// ----------------------------------------------------------------------------
// ambiguity transform
// ----------------------------------------------------------------------------

static SampledField ambiguity_fast(const SampledSignal& f,
                                   const SampledSignal& g) {
    check_same_grid(f.g, g.g, "discrete_ambiguity");
    const GridSpec& gr = f.g;
    const int d = gr.d, n = gr.n, c = n / 2;
    const double alpha = gr.h() * gr.h();
    const double cell = std::pow(gr.h(), d);
    const std::size_t npts = ipow(n, d);

    SampledField A = zero_field(gr);

    // half-shift phases e^{pi i alpha (m-c)(s-c)}, indexed by (s,m) per axis
    cvec half(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int m = 0; m < n; ++m)
            half[static_cast<std::size_t>(s) * n + m] = std::polar(
                1.0, kPi * alpha * static_cast<double>(s - c) * (m - c));

    const auto npts_i = static_cast<long long>(npts);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long lsi = 0; lsi < npts_i; ++lsi) {
        const auto ls = static_cast<std::size_t>(lsi);
        int s[4], j[4], jg[4];
        decode(ls, n, d, s);

        cvec cb(npts, cplx(0.0, 0.0));
        for (std::size_t lj = 0; lj < npts; ++lj) {
            decode(lj, n, d, j);
            bool ok = true;
            for (int a = 0; a < d; ++a) {
                jg[a] = j[a] - s[a] + c;
                if (jg[a] < 0 || jg[a] >= n) { ok = false; break; }
            }
            if (!ok) continue;
            std::size_t lg = 0;
            for (int a = 0; a < d; ++a)
                lg = lg * n + static_cast<std::size_t>(jg[a]);
            cb[lj] = f.v[lj] * std::conj(g.v[lg]);
        }
        for (int a = 0; a < d; ++a)
            detail::frac_dft_axis(cb, n, d, a, alpha, -1);

        int m[4];
        for (std::size_t lm = 0; lm < npts; ++lm) {
            decode(lm, n, d, m);
            cplx ph(cell, 0.0);
            for (int a = 0; a < d; ++a)
                ph *= half[static_cast<std::size_t>(s[a]) * n + m[a]];
            A.v[ls * npts + lm] = cb[lm] * ph;
        }
    }
    return A;
}

SampledField discrete_ambiguity(const SampledSignal& f, const SampledSignal& g,
                                Exec ex) {
    if (ex == Exec::Serial) return reference::discrete_ambiguity(f, g);
    return ambiguity_fast(f, g);
}

// ----------------------------------------------------------------------------
// twisted convolution
// ----------------------------------------------------------------------------

static SampledField twisted_fast_1d(const SampledField& F,
                                    const SampledField& G) {
    const GridSpec& gr = F.g;
    const int n = gr.n, c = n / 2;
    const double alpha = gr.h() * gr.h();
    const double cell = gr.h() * gr.h();
    const auto N = static_cast<std::size_t>(n);
    const std::size_t nfft = 2 * N;  // linear convolution length 2n-1

    // cache spectra of G's spatial rows: K_l'[e] = G(e, l'), e = shift + c
    std::vector<cvec> ghat(N);
    std::vector<char> gnz(N, 0);
    for (std::size_t lp = 0; lp < N; ++lp) {
        cvec row(nfft, cplx(0.0, 0.0));
        bool nz = false;
        for (std::size_t e = 0; e < N; ++e) {
            row[e] = G.v[e * N + lp];
            nz = nz || (row[e] != cplx(0.0, 0.0));
        }
        gnz[lp] = nz ? 1 : 0;
        if (nz) {
            fft_pow2(row, false);
            ghat[lp] = std::move(row);
        }
    }

    SampledField H = zero_field(gr);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int m = 0; m < n; ++m) {
        cvec mod(N);
        for (int j = 0; j < n; ++j)
            mod[static_cast<std::size_t>(j)] = std::polar(
                1.0, -kPi * alpha * static_cast<double>(j - c) * (m - c));
        cvec acc(N, cplx(0.0, 0.0));
        cvec u(nfft);
        for (int l = 0; l < n; ++l) {
            const int lp = m - l + c;
            if (lp < 0 || lp >= n || !gnz[static_cast<std::size_t>(lp)])
                continue;
            for (std::size_t j = 0; j < N; ++j)
                u[j] = F.v[j * N + static_cast<std::size_t>(l)] * mod[j];
            std::fill(u.begin() + static_cast<std::ptrdiff_t>(N), u.end(),
                      cplx(0.0, 0.0));
            fft_pow2(u, false);
            const cvec& gh = ghat[static_cast<std::size_t>(lp)];
            for (std::size_t t = 0; t < nfft; ++t) u[t] *= gh[t];
            fft_pow2(u, true);
            // conv output index i + c, then the outer phase in (i, l)
            for (int i = 0; i < n; ++i)
                acc[static_cast<std::size_t>(i)] +=
                    u[static_cast<std::size_t>(i + c)] *
                    std::polar(1.0, kPi * alpha * static_cast<double>(i - c) *
                                        (l - c));
        }
        for (std::size_t i = 0; i < N; ++i)
            H.v[i * N + static_cast<std::size_t>(m)] = acc[i] * cell;
    }
    return H;
}

SampledField twisted_convolution(const SampledField& F, const SampledField& G,
                                 Exec ex) {
    check_same_grid(F.g, G.g, "twisted_convolution");
    if (ex == Exec::Serial || F.g.d != 1)
        return reference::twisted_convolution(F, G);
    return twisted_fast_1d(F, G);
}

// ----------------------------------------------------------------------------
// reconstruction (adjoint of the analysis map)
// ----------------------------------------------------------------------------

static SampledSignal reconstruct_fast(const SampledField& E,
                                      const SampledSignal& g) {
    const GridSpec& gr = g.g;
    const int d = gr.d, n = gr.n, c = n / 2;
    const double alpha = gr.h() * gr.h();
    const double cell = std::pow(gr.h(), 2 * d);
    const std::size_t npts = ipow(n, d);

    SampledSignal h = zero_signal(gr);

    // per-axis phases e^{-pi i alpha (m-c)(s-c)}
    cvec half(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int m = 0; m < n; ++m)
            half[static_cast<std::size_t>(s) * n + m] = std::polar(
                1.0, -kPi * alpha * static_cast<double>(s - c) * (m - c));

    // rows processed in blocks: parallel transform, serial accumulate
    const std::size_t block = 64;
    std::vector<cvec> rows(block);
    for (std::size_t b0 = 0; b0 < npts; b0 += block) {
        const std::size_t bn = std::min(block, npts - b0);
        const auto bn_i = static_cast<long long>(bn);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long bi = 0; bi < bn_i; ++bi) {
            const std::size_t ls = b0 + static_cast<std::size_t>(bi);
            int s[4], m[4];
            decode(ls, n, d, s);
            cvec row(E.v.begin() + static_cast<std::ptrdiff_t>(ls * npts),
                     E.v.begin() + static_cast<std::ptrdiff_t>((ls + 1) * npts));
            for (std::size_t lm = 0; lm < npts; ++lm) {
                decode(lm, n, d, m);
                cplx ph(1.0, 0.0);
                for (int a = 0; a < d; ++a)
                    ph *= half[static_cast<std::size_t>(s[a]) * n + m[a]];
                row[lm] *= ph;
            }
            for (int a = 0; a < d; ++a)
                detail::frac_dft_axis(row, n, d, a, alpha, +1);
            rows[static_cast<std::size_t>(bi)] = std::move(row);
        }
        for (std::size_t bi = 0; bi < bn; ++bi) {
            const std::size_t ls = b0 + bi;
            int s[4], j[4], jg[4];
            decode(ls, n, d, s);
            const cvec& row = rows[bi];
            for (std::size_t lj = 0; lj < npts; ++lj) {
                decode(lj, n, d, j);
                bool ok = true;
                for (int a = 0; a < d; ++a) {
                    jg[a] = j[a] - s[a] + c;
                    if (jg[a] < 0 || jg[a] >= n) { ok = false; break; }
                }
                if (!ok) continue;
                std::size_t lg = 0;
                for (int a = 0; a < d; ++a)
                    lg = lg * n + static_cast<std::size_t>(jg[a]);
                h.v[lj] += g.v[lg] * row[lj];
            }
        }
    }
    for (auto& z : h.v) z *= cell;
    return h;
}

SampledSignal reconstruct_from_field(const SampledField& E,
                                     const SampledSignal& g, Exec ex) {
    if (E.g.d != g.g.d || E.g.n != g.g.n || E.g.T != g.g.T)
        throw ValidationError("reconstruct_from_field: grid mismatch");
    if (ex == Exec::Serial) return reference::reconstruct_from_field(E, g);
    return reconstruct_fast(E, g);
}

} // namespace symdil
