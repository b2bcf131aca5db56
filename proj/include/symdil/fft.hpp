// ============================================================================
// fft.hpp -- power-of-two FFT and the centered fractional DFT
//
// The discretized transforms in this library all reduce to sums of the form
//
//     b_m = sum_j a_j exp(sigma * 2*pi*i * alpha * (j - c)(m - c)),   c = n/2
//
// with a grid-dependent step alpha = h^2 = (T/n)^2 that is NOT 1/n, so a
// plain FFT does not apply.  The identity
//
//     (j-c)(m-c) = [ (j-c)^2 + (m-c)^2 - (j-m)^2 ] / 2
//
// turns the sum into a chirp multiply, a linear convolution against the
// even kernel k_t = exp(-sigma*pi*i*alpha*t^2), and a final chirp multiply
// (Bluestein).  The convolution is carried out with zero-padded power-of-two
// FFTs, giving O(n log n) for any alpha.  For alpha = 1/n the result
// matches the classic centered DFT, which is what the oracle tests pin.
//
// Nothing here is scaled by grid steps: callers multiply by h^d themselves
// so that the same kernel serves transforms along single axes of
// multi-dimensional arrays.
// ============================================================================
#pragma once

#include <complex>
#include <vector>

namespace symdil::fft {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 transform; n must be a power of two.
// Forward (inverse == false): X_k = sum_j x_j e^{-2 pi i j k / n}, unscaled.
// Inverse  (inverse == true): x_j = (1/n) sum_k X_k e^{+2 pi i j k / n}.
void fft_pow2(cvec& a, bool inverse);

// Zero-padded power-of-two linear convolution, result truncated to
// a.size() + b.size() - 1 terms.
cvec convolve(const cvec& a, const cvec& b);

// Centered fractional DFT (Bluestein):
//   b_m = sum_{j=0}^{n-1} a_j exp(sigma * 2*pi*i * alpha * (j - n/2)(m - n/2))
// for m = 0..n-1.  n must be even (grids here are powers of two).  sigma is
// +1 or -1.
cvec frac_dft_centered(const cvec& a, double alpha, int sigma);

} // namespace symdil::fft

// The rest of the library works with these names unqualified.
namespace symdil {
using fft::cplx;
using fft::cvec;
using fft::convolve;
using fft::fft_pow2;
using fft::frac_dft_centered;
using fft::is_pow2;
using fft::next_pow2;
} // namespace symdil
