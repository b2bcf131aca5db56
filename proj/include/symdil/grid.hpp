// ============================================================================
// grid.hpp -- uniformly sampled signals on [-T/2, T/2)^d and phase-space
//             fields on [-T/2, T/2)^{2d}
//
// One spacing h = T/n serves every axis; sample j of an axis sits at
// t_j = (j - n/2) h, so the origin is always a grid point (n is a power of
// two).  Field axes are ordered (x_1..x_d, w_1..w_d) and flattened row-major
// with the last axis fastest.
//
// Serialization is a flat little-endian binary stream of interleaved
// float64 (re, im) pairs plus a JSON sidecar {"kind", "d", "n", "T"}.
//
// Grids are capped at d <= 2: a field already holds n^{2d} complex values.
// ============================================================================
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "symdil/common.hpp"
#include "symdil/fft.hpp"
#include "symdil/symplectic.hpp"

namespace symdil {

struct GridSpec {
    int d = 1;      // signal dimension (fields live on 2d axes)
    int n = 512;    // samples per axis, power of two
    double T = 16;  // domain side length

    double h() const { return T / n; }
    double point(int j) const { return (j - n / 2) * h(); }
    // nearest grid index for a coordinate, or -1 when off-grid/outside
    int snap_index(double x) const;
};

GridSpec make_grid(int d, int n, double T);
// library defaults: n=512, T=16 for d=1; n=128, T=12 for d=2
GridSpec default_grid(int d);

struct SampledSignal {
    GridSpec g;
    cvec v;               // n^d values
    bool truncated = false;  // a resampling step dropped boundary mass

    std::size_t size() const;
    std::size_t index(const std::vector<int>& idx) const;  // d entries
};

struct SampledField {
    GridSpec g;
    cvec v;  // n^{2d} values, axes (x_1..x_d, w_1..w_d)

    std::size_t size() const;
    std::size_t index(const std::vector<int>& idx) const;  // 2d entries
};

SampledSignal make_signal(const GridSpec& g,
                          const std::function<cplx(const Vec&)>& fn);
SampledField make_field(const GridSpec& g,
                        const std::function<cplx(const Vec&)>& fn);

SampledSignal zero_signal(const GridSpec& g);
SampledField zero_field(const GridSpec& g);

// the standard Gaussian exp(-pi |t|^2) and its dilation
// exp(-pi a^2 |t|^2) sampled on g
SampledSignal gaussian_signal(const GridSpec& g, double a = 1.0);

// ----------------------------------------------------------------------------
// binary + sidecar serialization
// ----------------------------------------------------------------------------

void write_signal(const SampledSignal& s, const std::string& data_path,
                  const std::string& sidecar_path);
SampledSignal read_signal(const std::string& data_path,
                          const std::string& sidecar_path);

void write_field(const SampledField& f, const std::string& data_path,
                 const std::string& sidecar_path);
SampledField read_field(const std::string& data_path,
                        const std::string& sidecar_path);

} // namespace symdil
