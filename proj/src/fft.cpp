#include "symdil/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symdil/common.hpp"

namespace symdil::fft {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

bool is_pow2(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_pow2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw ValidationError("fft_pow2: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const double sgn = inverse ? +1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sgn * 2.0 * kPi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j]           = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv_n;
    }
}

cvec convolve(const cvec& a, const cvec& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t m = next_pow2(out_len);
    cvec fa(m, cplx(0.0, 0.0)), fb(m, cplx(0.0, 0.0));
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft_pow2(fa, true);
    fa.resize(out_len);
    return fa;
}

cvec frac_dft_centered(const cvec& a, double alpha, int sigma) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    if (n % 2 != 0 && n != 1)
        throw ValidationError("frac_dft_centered: length must be even");
    if (sigma != 1 && sigma != -1)
        throw ValidationError("frac_dft_centered: sigma must be +1 or -1");
    if (n == 1) return a;

    const double c = static_cast<double>(n) / 2.0;
    const double s = static_cast<double>(sigma);

    // chirped input x_j = a_j * exp(s*pi*i*alpha*(j-c)^2)
    cvec x(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = static_cast<double>(j) - c;
        const double ph = s * kPi * alpha * r * r;
        x[j] = a[j] * cplx(std::cos(ph), std::sin(ph));
    }

    // even kernel k_t = exp(-s*pi*i*alpha*t^2) for t = -(n-1)..(n-1), stored
    // shifted so that K[u] = k_{u-(n-1)}; then (x conv K)[m + n - 1] =
    // sum_j x_j k_{j-m}, which is the correlation we need.
    cvec K(2 * n - 1);
    for (std::size_t u = 0; u < 2 * n - 1; ++u) {
        const double t = static_cast<double>(u) - static_cast<double>(n - 1);
        const double ph = -s * kPi * alpha * t * t;
        K[u] = cplx(std::cos(ph), std::sin(ph));
    }

    cvec y = convolve(x, K);

    cvec b(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double r = static_cast<double>(m) - c;
        const double ph = s * kPi * alpha * r * r;
        b[m] = y[m + n - 1] * cplx(std::cos(ph), std::sin(ph));
    }
    return b;
}

} // namespace symdil::fft
