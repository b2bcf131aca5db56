// ============================================================================
// tfa.hpp -- discrete time-frequency engine
//
// Discretization conventions (shared by every routine here):
//   * signals sampled at t_j = (j - n/2) h, h = T/n, on [-T/2, T/2)^d;
//     phase-space fields use the same axis grid for x and for omega, axes
//     ordered (x_1..x_d, w_1..w_d), row-major, last axis fastest;
//   * integrals are Riemann sums with cell volume h^d (signals) or h^{2d}
//     (fields); out-of-domain values are zero -- nothing is periodized;
//   * the ambiguity transform of two sampled signals is evaluated through
//     the integer-shift identity
//         A(f,g)(x,w) = e^{pi i w.x} sum_u f(u) conj(g(u-x)) e^{-2 pi i w.u} h^d
//     so the half-sample shift lives in the exact phase factor e^{pi i w.x}
//     and the lag u-x is an integer number of cells; the sum over u is a
//     centered fractional DFT with alpha = h^2;
//   * time-frequency shifts are symmetrized:
//         rho(x,w) g(t) = e^{2 pi i w.(t - x/2)} g(t - x),
//     so A(f,g)(x,w) = <f, rho(x,w) g>;
//   * the discrete Fourier transform used by the metaplectic operators is
//     the same fractional DFT evaluated on the self-dual grid (h in time,
//     h in frequency).  It is spectrally accurate for signals that are
//     small near the domain boundary and band-concentrated, which is the
//     regime every built-in check operates in.
//
// Every optimized kernel has a direct-summation twin in namespace
// `reference` computing the identical quantity in O(N^2) time; the twins
// are the test oracles and the benchmark baselines.  Exec::Parallel selects
// the fast kernels (OpenMP across independent output rows when available),
// Exec::Serial selects the reference path.
// ============================================================================
#pragma once

#include <optional>

#include "symdil/exponents.hpp"
#include "symdil/grid.hpp"
#include "symdil/symplectic.hpp"
#include "symdil/weights.hpp"

namespace symdil {

enum class Exec { Serial, Parallel };

// ---- core transforms -------------------------------------------------------

// A(f,g) on the phase-space grid of f's geometry
SampledField discrete_ambiguity(const SampledSignal& f, const SampledSignal& g,
                                Exec ex = Exec::Parallel);

// unitary operator of the factored symplectic matrix, composed right-to-left:
// frequency shear as conjugated chirp, dilation by resampling, chirp as
// pointwise phase, coordinate/frequency swaps as partial Fourier transforms
SampledSignal apply_metaplectic(const Factorization& fact,
                                const SampledSignal& f);

// inner weighted l^p over the x axes, outer l^q over the w axes
double mixed_grid_norm(const SampledField& F, const ExponentPair& e,
                       const std::optional<WeightSpec>& w = std::nullopt);

// (F \nat G)(lambda) = sum_gamma F(gamma) G(lambda-gamma) e^{pi i [gamma,lambda]} h^{2d}
// with [(a,b),(x,w)] = x.b - a.w
SampledField twisted_convolution(const SampledField& F, const SampledField& G,
                                 Exec ex = Exec::Parallel);

// h = sum_lambda E(lambda) rho(lambda) g  * cell volume
SampledSignal reconstruct_from_field(const SampledField& E,
                                     const SampledSignal& g,
                                     Exec ex = Exec::Parallel);

// unnormalized localization operator: multiply A(f,g) by the symbol, then
// reconstruct with window g; symbol  a == 1 returns <g,g> f
SampledSignal toeplitz_apply(const SampledField& a, const SampledSignal& g,
                             const SampledSignal& f, Exec ex = Exec::Parallel);

// sup over the grid of |A(Sf, Sg) - A(f,g)(S^{-1} lambda)|, the right-hand
// side evaluated by exact re-indexing when S^{-1} preserves the grid and by
// cubic interpolation otherwise
double check_symplectic_covariance(const SampledSignal& f,
                                   const SampledSignal& g,
                                   const Factorization& fact,
                                   Exec ex = Exec::Parallel);

// field evaluated off-grid: exact lookup when every coordinate snaps to a
// grid point, tensor cubic (Catmull-Rom) interpolation otherwise, zero
// outside the domain
cplx field_value(const SampledField& F, const Vec& z);

// ---- small shared helpers --------------------------------------------------

double signal_l2_norm(const SampledSignal& f);           // Riemann l2
cplx signal_inner(const SampledSignal& f, const SampledSignal& g);
double max_abs_diff(const cvec& a, const cvec& b);

namespace detail {
// in-place centered fractional DFT along one axis of an n^rank row-major
// array (axis 0 slowest)
void frac_dft_axis(cvec& data, int n, int rank, int axis, double alpha,
                   int sigma);
} // namespace detail

// ---- direct-summation reference implementations ----------------------------

namespace reference {
SampledField discrete_ambiguity(const SampledSignal& f, const SampledSignal& g);
SampledField twisted_convolution(const SampledField& F, const SampledField& G);
SampledSignal reconstruct_from_field(const SampledField& E,
                                     const SampledSignal& g);
} // namespace reference

} // namespace symdil
