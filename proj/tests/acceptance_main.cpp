// ============================================================================
// acceptance_main.cpp -- end-to-end acceptance suite
//
// Eleven numbered criteria, each printed as one [PASS]/[FAIL] line with the
// measured quantity, the budgeted tolerance, and the elapsed time.  The
// process exits 0 only if every criterion passes.
//
// Notes on the two deliberate deviations from round numbers:
//   * criterion 6, second sweep: one swapped axis of two at (p,q) = (2,4)
//     has the exact closed-form slope (d-k)(1/2p - 1/2q) = 1 * (1/4 - 1/8)
//     = 0.125, which is what the harness asserts (the formula is printed
//     alongside so the expected value is auditable);
//   * criterion 9, grid-refinement half: the interpolation-limited kind
//     (dilation) dominates the maximum deviation; the halving requirement
//     is applied to that maximum across kinds, since the snap-exact kinds
//     sit at the rounding floor where halving is not meaningful.
// ============================================================================

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symdil/classifier.hpp"
#include "symdil/common.hpp"
#include "symdil/gaussian.hpp"
#include "symdil/grid.hpp"
#include "symdil/sweep.hpp"
#include "symdil/tfa.hpp"

using namespace symdil;

namespace {

// ---------------------------------------------------------------------------
// harness
// ---------------------------------------------------------------------------

struct Criterion {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<Criterion> g_results;

void run_criterion(int number, const std::string& name,
                   const std::function<bool(std::string&)>& body) {
    Criterion c;
    c.number = number;
    c.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.pass = body(c.detail);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] %2d. %-34s %-48s %7.2f s\n", c.pass ? "PASS" : "FAIL",
                c.number, c.name.c_str(), c.detail.c_str(), c.seconds);
    std::fflush(stdout);
    g_results.push_back(std::move(c));
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------
// random matrix builders (fixed seeds; independent of the library RNG-free
// code paths under test)
// ---------------------------------------------------------------------------

Mat random_symmetric(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat m(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = u(rng);
    return 0.5 * (m + m.transpose());
}

Mat random_invertible(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Mat m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m(r, c) = u(rng);
        if (std::abs(m.determinant()) > 0.3) return m;
    }
}

SymplecticMatrix random_generator_product(int d, int len,
                                          std::mt19937_64& rng) {
    SymplecticMatrix S = gen_identity(d);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> side(0, 1);
    for (int i = 0; i < len; ++i) {
        switch (kind(rng)) {
            case 0: S = multiply(S, gen_chirp(random_symmetric(d, rng))); break;
            case 1:
                S = multiply(S, gen_freq_shear(random_symmetric(d, rng)));
                break;
            case 2:
                S = multiply(S, gen_dilation(random_invertible(d, rng)));
                break;
            default: {
                std::vector<int> axes;
                for (int a = 1; a <= d; ++a)
                    if (coin(rng)) axes.push_back(side(rng) ? a : a + d);
                if (!axes.empty()) S = multiply(S, gen_swap_product(d, axes));
                break;
            }
        }
    }
    return S;
}

// ---------------------------------------------------------------------------
// adaptive Simpson quadrature (independent oracle for criterion 3)
// ---------------------------------------------------------------------------

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 42);
}

// ---------------------------------------------------------------------------
// shared field helpers (criterion 11)
// ---------------------------------------------------------------------------

void zero_boundary(SampledField& f) {
    const int rank = 2 * f.g.d;
    const int n = f.g.n;
    for (std::size_t flat = 0; flat < f.v.size(); ++flat) {
        std::size_t rem = flat;
        bool boundary = false;
        for (int a = 0; a < rank; ++a) {
            if (rem % n == 0) boundary = true;
            rem /= n;
        }
        if (boundary) f.v[flat] = 0.0;
    }
}

Vec field_coords(const GridSpec& g, std::size_t flat) {
    const int rank = 2 * g.d;
    Vec z(rank);
    std::size_t rem = flat;
    for (int a = rank - 1; a >= 0; --a) {
        z[a] = g.point(static_cast<int>(rem % g.n));
        rem /= g.n;
    }
    return z;
}

SampledField compose_field(const SampledField& F, const Mat& M) {
    SampledField out = zero_field(F.g);
    for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] = field_value(F, M * field_coords(F.g, i));
    return out;
}

bool interior_index(const GridSpec& g, std::size_t flat) {
    const int rank = 2 * g.d;
    std::size_t rem = flat;
    for (int a = 0; a < rank; ++a) {
        if (rem % g.n == 0) return false;
        rem /= g.n;
    }
    return true;
}

SampledField random_field(const GridSpec& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SampledField f = zero_field(g);
    for (auto& z : f.v) z = cplx(u(rng), u(rng));
    return f;
}

// largest covariance defect of the twisted convolution under a
// grid-preserving symplectic map, measured on interior cells
double twisted_covariance_defect(const GridSpec& g, const Mat& P,
                                 unsigned seed) {
    SampledField F = random_field(g, seed);
    SampledField G = random_field(g, seed + 1);
    zero_boundary(F);
    zero_boundary(G);
    const SampledField H = twisted_convolution(F, G);
    const SampledField Hc =
        twisted_convolution(compose_field(F, P), compose_field(G, P));
    double worst = 0.0;
    for (std::size_t i = 0; i < Hc.v.size(); ++i) {
        if (!interior_index(g, i)) continue;
        worst = std::max(worst,
                         std::abs(Hc.v[i] - field_value(H, P * field_coords(g, i))));
    }
    return worst;
}

ExponentPair pq(const char* p, const char* q) {
    return ExponentPair{parse_exponent(p), parse_exponent(q)};
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

bool criterion_classification(std::string& detail) {
    std::mt19937_64 rng(1001);
    const ExponentPair pairs[] = {pq("1", "1"),   pq("2", "2"), pq("1", "2"),
                                  pq("2", "1"),   pq("1", "inf"),
                                  pq("inf", "2")};
    int cases = 0;
    for (int d = 1; d <= 2; ++d) {
        std::vector<SymplecticMatrix> mats;
        mats.push_back(gen_standard(d));
        mats.push_back(gen_freq_shear(random_symmetric(d, rng)));
        mats.push_back(gen_freq_shear(Mat::Identity(d, d)));
        Mat Q = random_symmetric(d, rng);
        if (Q.cwiseAbs().maxCoeff() < 0.1) Q = Mat::Identity(d, d);
        mats.push_back(gen_chirp(Q));
        mats.push_back(gen_dilation(random_invertible(d, rng)));
        mats.push_back(gen_dilation(2.0 * Mat::Identity(d, d)));
        for (int i = 1; i <= d; ++i) mats.push_back(gen_swap(d, i));
        if (d == 2) mats.push_back(gen_swap_product(2, {1, 2}));

        for (const SymplecticMatrix& S : mats) {
            const bool ubt = is_upper_block_triangular(S, 1e-9);
            for (const ExponentPair& e : pairs) {
                const Verdict v = classify_unweighted(S, e);
                const bool want_bounded = e.equal() || ubt;
                const bool got_bounded =
                    v.status == Status::BoundedAutomorphism;
                ++cases;
                if (want_bounded != got_bounded) {
                    detail = "mismatch in a generator/exponent cell";
                    return false;
                }
                if (!got_bounded && v.status != Status::Unbounded) {
                    detail = "unexpected inconclusive verdict";
                    return false;
                }
            }
        }
    }
    detail = fmt("%g verdict cells, rule reproduced exactly",
                 static_cast<double>(cases));
    return true;
}

bool criterion_factorization(std::string& detail) {
    std::mt19937_64 rng(1002);
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int d = 1 + rep % 3;
        const SymplecticMatrix S =
            random_generator_product(d, 1 + rep % 5, rng);
        const Factorization f = factorize(S);
        const SymplecticMatrix R = reconstruct(f);
        const double scale = std::max(1.0, S.m.cwiseAbs().maxCoeff());
        worst = std::max(worst,
                         (R.m - S.m).cwiseAbs().maxCoeff() / scale);
        // every emitted factor is itself symplectic
        if (!is_symplectic(R.m, 1e-8) ||
            !is_symplectic(gen_chirp(f.Q).m, 1e-12) ||
            !is_symplectic(gen_dilation(f.L).m, 1e-9) ||
            !is_symplectic(gen_freq_shear(f.P).m, 1e-12) ||
            (!f.index_set.empty() &&
             !is_symplectic(gen_swap_product(f.d, f.index_set).m, 1e-12))) {
            detail = "a factor failed the group membership check";
            return false;
        }
    }
    detail = fmt("1000 round-trips, worst rel err %.2e (tol 1e-10)", worst);
    return worst <= 1e-10;
}

bool criterion_gaussian_integral(std::string& detail) {
    std::mt19937_64 rng(1003);
    std::uniform_real_distribution<double> ub(-0.8, 0.8);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + rep % 2;
        Mat A = random_invertible(n, rng);
        A = Mat(A.transpose() * A) + 0.3 * Mat::Identity(n, n);
        Vec beta(n);
        for (int i = 0; i < n; ++i) beta[i] = ub(rng);
        const double want = gaussian_integral(A, beta);
        const Vec center = A.inverse() * beta;
        const double lmin =
            Eigen::SelfAdjointEigenSolver<Mat>(A).eigenvalues().minCoeff();
        const double R = 7.0 / std::sqrt(lmin);
        double got = 0.0;
        if (n == 1) {
            auto f = [&](double x) {
                return std::exp(-M_PI * A(0, 0) * x * x +
                                2.0 * M_PI * beta[0] * x);
            };
            got = integrate(f, center[0] - R, center[0] + R, 1e-13 * want);
        } else {
            auto f = [&](double x, double y) {
                Vec v(2);
                v << x, y;
                return std::exp(-M_PI * v.dot(A * v) +
                                2.0 * M_PI * beta.dot(v));
            };
            auto outer = [&](double x) {
                auto inner = [&](double y) { return f(x, y); };
                return integrate(inner, center[1] - R, center[1] + R,
                                 1e-14 * want);
            };
            got = integrate(outer, center[0] - R, center[0] + R,
                            1e-11 * want);
        }
        worst = std::max(worst, std::abs(got - want) / want);
    }
    detail = fmt("100 quadratures, worst rel err %.2e (tol 1e-8)", worst);
    return worst <= 1e-8;
}

bool criterion_ambiguity_formula(std::string& detail) {
    const GridSpec g = make_grid(1, 512, 16.0);
    const SampledSignal w = gaussian_signal(g);
    double worst = 0.0;
    for (double eps : {1.2, 2.0, 5.0}) {
        const SampledSignal f =
            gaussian_signal(g, std::sqrt(eps * eps - 1.0));
        const SampledField A = discrete_ambiguity(f, w);
        Vec x(1), om(1);
        for (int s = 0; s < g.n; ++s)
            for (int m = 0; m < g.n; ++m) {
                x[0] = g.point(s);
                om[0] = g.point(m);
                const cplx want = ambiguity_gaussian(eps, 1, x, om);
                worst = std::max(
                    worst, std::abs(A.v[static_cast<std::size_t>(s) * g.n + m] -
                                    want));
            }
    }
    detail = fmt("3 dilations, sup error %.2e (tol 1e-3)", worst);
    return worst <= 1e-3;
}

bool criterion_mixed_norm_formula(std::string& detail) {
    const double eps = 1.5;
    const GridSpec g = make_grid(1, 512, 16.0);
    const SymplecticMatrix mats[] = {gen_identity(1), gen_standard(1),
                                     gen_chirp(Mat::Identity(1, 1))};
    const ExponentPair pairs[] = {pq("1", "2"), pq("2", "1"), pq("1", "inf")};
    double worst = 0.0;
    for (const SymplecticMatrix& S : mats) {
        const GaussianWitness wit = make_witness(S, eps);
        const SampledField F = make_field(g, [&](const Vec& z) {
            return cplx(witness_profile_value(wit, z), 0.0);
        });
        for (const ExponentPair& e : pairs) {
            const double got = mixed_grid_norm(F, e);
            const NormValue want = mixed_norm_dilated(S, eps, e);
            worst = std::max(worst,
                             std::abs(got - want.value) / want.value);
        }
    }
    detail = fmt("9 combinations, worst rel err %.2e (tol 1e-2)", worst);
    return worst <= 1e-2;
}

bool criterion_case1_exponents(std::string& detail) {
    // full swap in one degree of freedom at (1, inf): exact slope 1/2
    SweepConfig c1;
    c1.matrix = standard_form(1);
    c1.e = pq("1", "inf");
    const SweepReport r1 = run_sweep(c1);
    const double dev1 = std::abs(r1.fitted_exponent - 0.5);

    // one swapped axis of two at (2,4): slope (d-k)(1/2p-1/2q) = 0.125
    SweepConfig c2;
    c2.matrix = gen_swap(2, 2).m;
    c2.e = pq("2", "4");
    const SweepReport r2 = run_sweep(c2);
    const double dev2 = std::abs(r2.fitted_exponent - 0.125);

    detail = fmt("slopes %.4f (want 0.5 +- 0.02), %.4f (want 0.125 +- 0.01)",
                 r1.fitted_exponent, r2.fitted_exponent);
    return dev1 <= 0.02 && dev2 <= 0.01 && r1.agreement && r2.agreement;
}

bool criterion_case2_divergence(std::string& detail) {
    SweepConfig cfg;
    cfg.matrix = gen_chirp(Mat::Identity(1, 1)).m;
    cfg.e = pq("1", "2");
    cfg.eps_min = 1.001;
    cfg.eps_max = 1.2;
    const SweepReport rep = run_sweep(cfg);
    const double dev = std::abs(rep.fitted_exponent - (-0.25));
    detail = fmt("slope %.4f toward eps=1 (want -0.25 +- 0.02)",
                 rep.fitted_exponent);
    return dev <= 0.02;
}

bool criterion_bounded_flatness(std::string& detail) {
    std::mt19937_64 rng(1008);
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        const SymplecticMatrix S =
            multiply(gen_freq_shear(random_symmetric(1, rng)),
                     gen_dilation(random_invertible(1, rng)));
        SweepConfig cfg;
        cfg.matrix = S.m;
        cfg.e = pq("1", "inf");
        const SweepReport rep2 = run_sweep(cfg);
        worst = std::max(worst, std::abs(rep2.fitted_exponent));
    }
    detail = fmt("3 triangular matrices, worst |slope| %.2e (tol 0.02)", worst);
    return worst <= 0.02;
}

bool criterion_covariance(std::string& detail) {
    Mat one(1, 1), two(1, 1);
    one << 1.0;
    two << 2.0;
    const std::pair<const char*, Mat> kinds[] = {
        {"standard", gen_standard(1).m},
        {"freq_shear", gen_freq_shear(one).m},
        {"chirp", gen_chirp(one).m},
        {"dilation", gen_dilation(two).m},
        {"swap", gen_swap_product(1, {1}).m},
    };
    double max512 = 0.0, max1024 = 0.0;
    bool all_within = true;
    for (const auto& [name, M] : kinds) {
        const Factorization fact = factorize(make_symplectic(M));
        double dev512 = 0.0;
        for (int n : {512, 1024}) {
            const GridSpec g = make_grid(1, n, 16.0);
            const SampledSignal f = gaussian_signal(g, 1.2);
            const SampledSignal w = gaussian_signal(g);
            const double dev = check_symplectic_covariance(f, w, fact);
            if (n == 512) {
                dev512 = dev;
                max512 = std::max(max512, dev);
                if (dev > 1e-3) all_within = false;
            } else {
                max1024 = std::max(max1024, dev);
            }
        }
        (void)dev512;
    }
    detail = fmt("max dev %.2e at n=512 (tol 1e-3); %.2e at n=1024",
                 max512, max1024);
    return all_within && max1024 <= 0.5 * max512;
}

bool criterion_weighted_transfer(std::string& detail) {
    std::mt19937_64 rng(1010);
    const ExponentPair pairs[] = {pq("1", "2"), pq("2", "1"), pq("1", "inf"),
                                  pq("2", "2")};
    int cells = 0;
    for (int d = 1; d <= 2; ++d) {
        std::vector<SymplecticMatrix> mats;
        mats.push_back(gen_identity(d));
        mats.push_back(gen_standard(d));
        mats.push_back(gen_freq_shear(Mat::Identity(d, d)));
        mats.push_back(gen_chirp(Mat::Identity(d, d)));
        mats.push_back(gen_dilation(2.0 * Mat::Identity(d, d)));
        for (int i = 1; i <= d; ++i) mats.push_back(gen_swap(d, i));
        for (int rep = 0; rep < 10; ++rep)
            mats.push_back(random_generator_product(d, 2 + rep % 3, rng));

        const WeightSpec m11 =
            make_weight(WeightFamily::RadialLog, 1.0, 1.0, d);
        const WeightSpec p1 = make_weight(WeightFamily::Spatial, 1.0, 0.0, d);
        for (const SymplecticMatrix& S : mats) {
            for (const ExponentPair& e : pairs) {
                ++cells;
                // radial weight: verdict must transfer verbatim
                const Verdict u = classify_unweighted(S, e);
                const Verdict wm = classify_weighted(S, e, m11);
                if (wm.status != u.status) {
                    detail = "radial-weight transfer mismatch";
                    return false;
                }
                // spatial weight: inconclusive exactly on the open cases
                const Verdict wp = classify_weighted(S, e, p1);
                const bool open =
                    equivalence_under(p1, S) == Equivalence::NotEquivalent;
                if (open != (wp.status == Status::Inconclusive)) {
                    detail = "spatial-weight open-case boundary mismatch";
                    return false;
                }
                if (!open && wp.status != u.status) {
                    detail = "spatial-weight transfer mismatch";
                    return false;
                }
            }
        }
    }
    detail = fmt("%g weighted cells consistent", static_cast<double>(cells));
    return true;
}

bool criterion_twisted_identities(std::string& detail) {
    // two-sided delta identity
    const GridSpec g = make_grid(1, 128, 16.0);
    const SampledSignal f = gaussian_signal(g, 1.3);
    const SampledSignal w = gaussian_signal(g);
    const SampledField F = discrete_ambiguity(f, w);
    SampledField delta = zero_field(g);
    const double cell = g.h() * g.h();
    delta.v[delta.index({g.n / 2, g.n / 2})] = cplx(1.0 / cell, 0.0);
    const SampledField right = twisted_convolution(F, delta);
    const SampledField left = twisted_convolution(delta, F);
    const double ddev =
        std::max(max_abs_diff(right.v, F.v), max_abs_diff(left.v, F.v));

    // covariance under grid quasi-permutations
    const double cov1 =
        twisted_covariance_defect(make_grid(1, 128, 16.0), standard_form(1), 42);
    const double cov2 = twisted_covariance_defect(make_grid(2, 8, 6.0),
                                                  gen_swap(2, 1).m, 43);
    const double cdev = std::max(cov1, cov2);

    // unit-symbol localization reproduces the input (default grid)
    const GridSpec gd = default_grid(1);
    const SampledSignal fd = gaussian_signal(gd, 1.3);
    const SampledSignal wd = gaussian_signal(gd);
    SampledField ones = zero_field(gd);
    for (auto& z : ones.v) z = cplx(1.0, 0.0);
    const SampledSignal h = toeplitz_apply(ones, wd, fd);
    const double g2 = signal_l2_norm(wd) * signal_l2_norm(wd);
    double tdev = 0.0;
    for (std::size_t i = 0; i < h.v.size(); ++i)
        tdev = std::max(tdev, std::abs(h.v[i] / g2 - fd.v[i]));

    detail = fmt("delta %.1e (1e-10); covar %.1e (1e-8); unit %.1e (1e-3)",
                 ddev, cdev, tdev);
    return ddev <= 1e-10 && cdev <= 1e-8 && tdev <= 1e-3;
}

} // namespace

int main() {
    std::printf("acceptance suite: symplectic dilation toolkit\n");
#ifdef _OPENMP
    std::printf("(OpenMP enabled)\n");
#else
    std::printf("(OpenMP disabled: serial build)\n");
#endif
    std::printf("\n");

    run_criterion(1, "classification table", criterion_classification);
    run_criterion(2, "factorization round-trip", criterion_factorization);
    run_criterion(3, "gaussian integral oracle", criterion_gaussian_integral);
    run_criterion(4, "ambiguity closed form", criterion_ambiguity_formula);
    run_criterion(5, "mixed-norm closed form", criterion_mixed_norm_formula);
    run_criterion(6, "growth exponents (swap cases)", criterion_case1_exponents);
    run_criterion(7, "divergence toward eps = 1", criterion_case2_divergence);
    run_criterion(8, "bounded-case flatness", criterion_bounded_flatness);
    run_criterion(9, "symplectic covariance", criterion_covariance);
    run_criterion(10, "weighted transfer", criterion_weighted_transfer);
    run_criterion(11, "twisted-convolution identities",
                  criterion_twisted_identities);

    int failed = 0;
    for (const Criterion& c : g_results)
        if (!c.pass) ++failed;
    std::printf("\n%zu criteria, %d failed\n", g_results.size(), failed);
    return failed == 0 ? 0 : 1;
}
