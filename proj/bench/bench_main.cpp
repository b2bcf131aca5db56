// ============================================================================
// bench_main.cpp -- timing comparison between the direct-summation reference
// kernels and the FFT-based (OpenMP-parallel when available) kernels.
// Informational only; nothing here asserts.
// ============================================================================
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symdil/tfa.hpp"

using namespace symdil;

namespace {

template <typename Fn>
double time_once(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench_ambiguity(int n) {
    const GridSpec grid = make_grid(1, n, 16.0);
    const SampledSignal f = gaussian_signal(grid, 1.3);
    const SampledSignal g = gaussian_signal(grid);
    SampledField a, b;
    const double ts = time_once([&] { a = discrete_ambiguity(f, g, Exec::Serial); });
    const double tp = time_once([&] { b = discrete_ambiguity(f, g, Exec::Parallel); });
    std::printf("ambiguity      n=%4d   serial %8.3fs   fast %8.3fs   speedup %6.1fx   maxdiff %.2e\n",
                n, ts, tp, ts / tp, max_abs_diff(a.v, b.v));
}

void bench_twisted(int n) {
    const GridSpec grid = make_grid(1, n, 16.0);
    const SampledSignal f = gaussian_signal(grid, 1.3);
    const SampledSignal g = gaussian_signal(grid);
    const SampledField F = discrete_ambiguity(f, g, Exec::Parallel);
    const SampledField G = discrete_ambiguity(g, g, Exec::Parallel);
    SampledField a, b;
    const double ts = time_once([&] { a = twisted_convolution(F, G, Exec::Serial); });
    const double tp = time_once([&] { b = twisted_convolution(F, G, Exec::Parallel); });
    std::printf("twisted conv   n=%4d   serial %8.3fs   fast %8.3fs   speedup %6.1fx   maxdiff %.2e\n",
                n, ts, tp, ts / tp, max_abs_diff(a.v, b.v));
}

void bench_reconstruct(int n) {
    const GridSpec grid = make_grid(1, n, 16.0);
    const SampledSignal f = gaussian_signal(grid, 1.3);
    const SampledSignal g = gaussian_signal(grid);
    const SampledField F = discrete_ambiguity(f, g, Exec::Parallel);
    SampledSignal a, b;
    const double ts = time_once([&] { a = reconstruct_from_field(F, g, Exec::Serial); });
    const double tp = time_once([&] { b = reconstruct_from_field(F, g, Exec::Parallel); });
    std::printf("reconstruct    n=%4d   serial %8.3fs   fast %8.3fs   speedup %6.1fx   maxdiff %.2e\n",
                n, ts, tp, ts / tp, max_abs_diff(a.v, b.v));
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; fast kernels run single-threaded\n");
#endif
    bench_ambiguity(64);
    bench_ambiguity(128);
    bench_twisted(32);
    bench_twisted(64);
    bench_reconstruct(64);
    bench_reconstruct(128);
    return 0;
}
