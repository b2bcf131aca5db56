// ============================================================================
// tfa.cpp -- high-level discrete time-frequency operations: metaplectic
// operator application, mixed grid norms, field interpolation, the
// symplectic-covariance check, and Toeplitz (localization) application.
//
// Metaplectic realization of a factored matrix, applied right-to-left:
//   U_P  : F V_{-P} F^{-1}       (conjugated chirp)
//   D_L  : |det L|^{-1/2} f(L^{-1} .)  resampled; exact re-indexing when
//          L^{-1} maps the sample lattice into itself, band-limited
//          oversampling + cubic interpolation otherwise
//   V_Q  : pointwise e^{pi i t.Qt}
//   Pi_i : partial Fourier transform along axis i (inverse transform for
//          the transposed swaps i in (d, 2d])
// The scaling |det L|^{-1/2} keeps the operator unitary, which is what the
// ambiguity covariance A(Sf, Sg) = A(f,g) o S^{-1} forces: with any other
// power of the determinant the identity fails for |det L| != 1.
// The overall sign/phase of the double cover is irrelevant: it cancels in
// every modulus or f-against-g comparison made here.
// ============================================================================
#include <algorithm>
#include <cmath>
#include <limits>

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

// index on the infinite sample lattice (may fall outside [0,n)), or
// INT_MIN when x is not within snap tolerance of any lattice point
int lattice_index(double x, double h, int c) {
    const double j = x / h + c;
    const double r = std::round(j);
    if (std::abs(j - r) > tols().snap * std::max(1.0, std::abs(j)))
        return std::numeric_limits<int>::min();
    return static_cast<int>(r);
}

// ---- full and partial Fourier transforms on the self-dual grid ------------

void fourier_axes(SampledSignal& s, int sigma, int first_axis, int last_axis) {
    const double alpha = s.g.h() * s.g.h();
    for (int a = first_axis; a <= last_axis; ++a)
        detail::frac_dft_axis(s.v, s.g.n, s.g.d, a, alpha, sigma);
    const double scale = std::pow(s.g.h(), last_axis - first_axis + 1);
    for (auto& z : s.v) z *= scale;
}

void apply_chirp(SampledSignal& s, const Mat& Q, double sign) {
    const GridSpec& gr = s.g;
    const std::size_t npts = ipow(gr.n, gr.d);
    int j[4];
    Vec t(gr.d);
    for (std::size_t lj = 0; lj < npts; ++lj) {
        decode(lj, gr.n, gr.d, j);
        for (int a = 0; a < gr.d; ++a) t[a] = gr.point(j[a]);
        s.v[lj] *= std::polar(1.0, sign * kPi * t.dot(Q * t));
    }
}

void apply_freq_shear(SampledSignal& s, const Mat& P) {
    fourier_axes(s, +1, 0, s.g.d - 1);  // F^{-1}
    apply_chirp(s, P, -1.0);            // V_{-P}
    fourier_axes(s, -1, 0, s.g.d - 1);  // F
}

void apply_swap(SampledSignal& s, int i) {
    const int d = s.g.d;
    if (i >= 1 && i <= d) {
        fourier_axes(s, -1, i - 1, i - 1);
    } else if (i >= d + 1 && i <= 2 * d) {
        fourier_axes(s, +1, i - d - 1, i - d - 1);
    } else {
        throw ValidationError("apply_metaplectic: swap index out of range");
    }
}

// ---- band-limited oversampling for the dilation resampler -----------------

// oversample one axis by kappa via spectrum zero-padding; dims[axis] grows
cvec oversample_axis(const cvec& data, std::vector<int>& dims, int axis,
                     int kappa) {
    const int n = dims[axis];
    const int N2 = kappa * n;
    std::size_t stride = 1, outer = 1;
    for (std::size_t a = static_cast<std::size_t>(axis) + 1; a < dims.size(); ++a)
        stride *= static_cast<std::size_t>(dims[a]);
    for (std::size_t a = 0; a < static_cast<std::size_t>(axis); ++a)
        outer *= static_cast<std::size_t>(dims[a]);

    cvec out(outer * static_cast<std::size_t>(N2) * stride);
    cvec line(static_cast<std::size_t>(n));
    cvec pad(static_cast<std::size_t>(N2));
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < stride; ++i) {
            const std::size_t bin = o * static_cast<std::size_t>(n) * stride + i;
            for (int j = 0; j < n; ++j)
                line[static_cast<std::size_t>(j)] = data[bin + j * stride];
            fft_pow2(line, false);
            std::fill(pad.begin(), pad.end(), cplx(0.0, 0.0));
            // split the spectrum around the centered window [-n/2, n/2)
            for (int k = 0; k < n / 2; ++k)
                pad[static_cast<std::size_t>(k)] = line[static_cast<std::size_t>(k)];
            for (int k = 0; k < n / 2; ++k)
                pad[static_cast<std::size_t>(N2 - n / 2 + k)] =
                    line[static_cast<std::size_t>(n / 2 + k)];
            fft_pow2(pad, true);
            const std::size_t bout =
                o * static_cast<std::size_t>(N2) * stride + i;
            for (int j = 0; j < N2; ++j)
                out[bout + j * stride] =
                    pad[static_cast<std::size_t>(j)] * static_cast<double>(kappa);
        }
    }
    dims[axis] = N2;
    return out;
}

double catmull_rom_w(double tau, int k) {
    switch (k) {
        case 0: return 0.5 * (-tau * tau * tau + 2.0 * tau * tau - tau);
        case 1: return 0.5 * (3.0 * tau * tau * tau - 5.0 * tau * tau + 2.0);
        case 2: return 0.5 * (-3.0 * tau * tau * tau + 4.0 * tau * tau + tau);
        default: return 0.5 * (tau * tau * tau - tau * tau);
    }
}

// tensor Catmull-Rom on a uniform grid: pos_a in fine-index units
cplx cubic_eval(const cvec& data, const std::vector<int>& dims,
                const std::vector<double>& pos) {
    const int rank = static_cast<int>(dims.size());
    int base[4];
    double tau[4];
    for (int a = 0; a < rank; ++a) {
        base[a] = static_cast<int>(std::floor(pos[static_cast<std::size_t>(a)]));
        tau[a] = pos[static_cast<std::size_t>(a)] - base[a];
    }
    std::size_t strides[4];
    std::size_t s = 1;
    for (int a = rank - 1; a >= 0; --a) {
        strides[a] = s;
        s *= static_cast<std::size_t>(dims[static_cast<std::size_t>(a)]);
    }
    cplx acc(0.0, 0.0);
    const int taps = 1 << (2 * rank);  // 4^rank
    for (int tp = 0; tp < taps; ++tp) {
        double w = 1.0;
        std::size_t lin = 0;
        bool ok = true;
        int rem = tp;
        for (int a = 0; a < rank; ++a) {
            const int k = rem % 4;
            rem /= 4;
            const int idx = base[a] - 1 + k;
            if (idx < 0 || idx >= dims[static_cast<std::size_t>(a)]) {
                ok = false;
                break;
            }
            w *= catmull_rom_w(tau[a], k);
            lin += static_cast<std::size_t>(idx) * strides[a];
        }
        if (ok) acc += w * data[lin];
    }
    return acc;
}

void apply_dilation(SampledSignal& s, const Mat& L) {
    const GridSpec& gr = s.g;
    const int d = gr.d, n = gr.n, c = n / 2;
    const double det = L.determinant();
    if (!(std::abs(det) > tols().rank))
        throw DomainError("apply_metaplectic: dilation block is singular");
    const Mat Linv = L.inverse();
    const double scale = 1.0 / std::sqrt(std::abs(det));
    const std::size_t npts = ipow(n, d);

    // targets u_j = L^{-1} t_j
    std::vector<Vec> targets(npts, Vec(d));
    int j[4];
    Vec t(d);
    bool outside = false;
    for (std::size_t lj = 0; lj < npts; ++lj) {
        decode(lj, n, d, j);
        for (int a = 0; a < d; ++a) t[a] = gr.point(j[a]);
        targets[lj] = Linv * t;
        for (int a = 0; a < d; ++a)
            if (targets[lj][a] < -gr.T / 2 || targets[lj][a] >= gr.T / 2)
                outside = true;
    }

    // exact path: every target on the sample lattice
    bool exact = true;
    for (std::size_t lj = 0; lj < npts && exact; ++lj)
        for (int a = 0; a < d; ++a)
            if (lattice_index(targets[lj][a], gr.h(), c) ==
                std::numeric_limits<int>::min()) {
                exact = false;
                break;
            }

    cvec out(npts, cplx(0.0, 0.0));
    if (exact) {
        for (std::size_t lj = 0; lj < npts; ++lj) {
            std::size_t lin = 0;
            bool ok = true;
            for (int a = 0; a < d; ++a) {
                const int idx = lattice_index(targets[lj][a], gr.h(), c);
                if (idx < 0 || idx >= n) { ok = false; break; }
                lin = lin * n + static_cast<std::size_t>(idx);
            }
            out[lj] = ok ? scale * s.v[lin] : cplx(0.0, 0.0);
        }
    } else {
        const int kappa = (d == 1) ? 8 : 4;
        std::vector<int> dims(static_cast<std::size_t>(d), n);
        cvec fine = s.v;
        for (int a = 0; a < d; ++a) fine = oversample_axis(fine, dims, a, kappa);
        const double hf = gr.h() / kappa;
        std::vector<double> pos(static_cast<std::size_t>(d));
        for (std::size_t lj = 0; lj < npts; ++lj) {
            bool inside = true;
            for (int a = 0; a < d; ++a) {
                const double u = targets[lj][a];
                if (u < -gr.T / 2 || u >= gr.T / 2) { inside = false; break; }
                pos[static_cast<std::size_t>(a)] = u / hf + kappa * c;
            }
            out[lj] = inside ? scale * cubic_eval(fine, dims, pos)
                             : cplx(0.0, 0.0);
        }
    }
    s.v = std::move(out);
    if (outside) s.truncated = true;
}

} // namespace

SampledSignal apply_metaplectic(const Factorization& fact,
                                const SampledSignal& f) {
    if (fact.d != f.g.d)
        throw ValidationError("apply_metaplectic: dimension mismatch");
    SampledSignal cur = f;
    if (!fact.P.isZero(0.0)) apply_freq_shear(cur, fact.P);
    if (!(fact.L - Mat::Identity(fact.d, fact.d)).isZero(0.0))
        apply_dilation(cur, fact.L);
    if (!fact.Q.isZero(0.0)) apply_chirp(cur, fact.Q, +1.0);
    for (int i : fact.index_set) apply_swap(cur, i);
    return cur;
}

double mixed_grid_norm(const SampledField& F, const ExponentPair& e,
                       const std::optional<WeightSpec>& w) {
    const GridSpec& gr = F.g;
    const int d = gr.d, n = gr.n;
    if (w && w->d != d)
        throw ValidationError("mixed_grid_norm: weight dimension mismatch");
    const std::size_t npts = ipow(n, d);
    const double cell = std::pow(gr.h(), d);

    std::vector<double> coord(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) coord[static_cast<std::size_t>(j)] = gr.point(j);

    double out_sum = 0.0, out_max = 0.0;
    int ms[4], xs[4];
    Vec z(2 * d);
    for (std::size_t lm = 0; lm < npts; ++lm) {
        decode(lm, n, d, ms);
        for (int a = 0; a < d; ++a)
            z[d + a] = coord[static_cast<std::size_t>(ms[a])];
        double in_sum = 0.0, in_max = 0.0;
        for (std::size_t ls = 0; ls < npts; ++ls) {
            double val = std::abs(F.v[ls * npts + lm]);
            if (w) {
                decode(ls, n, d, xs);
                for (int a = 0; a < d; ++a)
                    z[a] = coord[static_cast<std::size_t>(xs[a])];
                val *= eval_weight(*w, z);
            }
            if (e.p.inf) in_max = std::max(in_max, val);
            else in_sum += std::pow(val, e.p.v);
        }
        const double inner =
            e.p.inf ? in_max : std::pow(in_sum * cell, 1.0 / e.p.v);
        if (e.q.inf) out_max = std::max(out_max, inner);
        else out_sum += std::pow(inner, e.q.v);
    }
    return e.q.inf ? out_max : std::pow(out_sum * cell, 1.0 / e.q.v);
}

cplx field_value(const SampledField& F, const Vec& z) {
    const GridSpec& gr = F.g;
    const int rank = 2 * gr.d, n = gr.n;
    if (z.size() != rank)
        throw ValidationError("field_value: coordinate rank mismatch");
    for (int a = 0; a < rank; ++a)
        if (z[a] < -gr.T / 2 || z[a] >= gr.T / 2) return cplx(0.0, 0.0);

    bool snapped = true;
    std::size_t lin = 0;
    for (int a = 0; a < rank; ++a) {
        const int idx = gr.snap_index(z[a]);
        if (idx < 0) { snapped = false; break; }
        lin = lin * n + static_cast<std::size_t>(idx);
    }
    if (snapped) return F.v[lin];

    std::vector<int> dims(static_cast<std::size_t>(rank), n);
    std::vector<double> pos(static_cast<std::size_t>(rank));
    for (int a = 0; a < rank; ++a)
        pos[static_cast<std::size_t>(a)] = z[a] / gr.h() + n / 2.0;
    return cubic_eval(F.v, dims, pos);
}

double check_symplectic_covariance(const SampledSignal& f,
                                   const SampledSignal& g,
                                   const Factorization& fact, Exec ex) {
    if (f.g.d != g.g.d || f.g.n != g.g.n || f.g.T != g.g.T)
        throw ValidationError("check_symplectic_covariance: grid mismatch");
    const SymplecticMatrix S = reconstruct(fact);
    const SymplecticMatrix Si = invert_symplectic(S);

    const SampledSignal Sf = apply_metaplectic(fact, f);
    const SampledSignal Sg = apply_metaplectic(fact, g);
    const SampledField lhs = discrete_ambiguity(Sf, Sg, ex);
    const SampledField rhs = discrete_ambiguity(f, g, ex);

    const GridSpec& gr = f.g;
    const int rank = 2 * gr.d, n = gr.n;
    const std::size_t total = ipow(n, rank);
    double dev = 0.0;
    int idx[4];
    Vec z(rank);
    for (std::size_t lin = 0; lin < total; ++lin) {
        decode(lin, n, rank, idx);
        for (int a = 0; a < rank; ++a) z[a] = gr.point(idx[a]);
        const cplx expect = field_value(rhs, Si.m * z);
        dev = std::max(dev, std::abs(lhs.v[lin] - expect));
    }
    return dev;
}

SampledSignal toeplitz_apply(const SampledField& a, const SampledSignal& g,
                             const SampledSignal& f, Exec ex) {
    if (a.g.d != f.g.d || a.g.n != f.g.n || a.g.T != f.g.T)
        throw ValidationError("toeplitz_apply: grid mismatch");
    const double g2 = signal_l2_norm(g);
    if (g2 * g2 <= tols().validate)
        throw DomainError("toeplitz_apply: degenerate window");
    SampledField E = discrete_ambiguity(f, g, ex);
    for (std::size_t i = 0; i < E.v.size(); ++i) E.v[i] *= a.v[i];
    return reconstruct_from_field(E, g, ex);
}

double signal_l2_norm(const SampledSignal& f) {
    double s = 0.0;
    for (const auto& z : f.v) s += std::norm(z);
    return std::sqrt(s * std::pow(f.g.h(), f.g.d));
}

cplx signal_inner(const SampledSignal& f, const SampledSignal& g) {
    if (f.v.size() != g.v.size())
        throw ValidationError("signal_inner: size mismatch");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < f.v.size(); ++i) s += f.v[i] * std::conj(g.v[i]);
    return s * std::pow(f.g.h(), f.g.d);
}

double max_abs_diff(const cvec& a, const cvec& b) {
    if (a.size() != b.size())
        throw ValidationError("max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace symdil
