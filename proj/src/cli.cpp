// ============================================================================
// cli.cpp -- command-line front end (see cli.hpp for the exit-code contract)
// ============================================================================
#include "symdil/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"
#include "symdil/json_io.hpp"
#include "symdil/sweep.hpp"
#include "symdil/tfa.hpp"

namespace symdil {

namespace {

ExponentPair exponents_from(const std::string& p, const std::string& q) {
    return ExponentPair{parse_exponent(p), parse_exponent(q)};
}

int run_check(const std::string& matrix_path, const std::string& p,
              const std::string& q, const std::string& weight_path,
              std::ostream& out) {
    const SymplecticMatrix S = make_symplectic(load_matrix(matrix_path));
    const ExponentPair e = exponents_from(p, q);
    const Verdict v = weight_path.empty()
                          ? classify_unweighted(S, e)
                          : classify_weighted(S, e, load_weight(weight_path));
    out << verdict_to_json(v).dump(2) << "\n";
    return 0;
}

int run_factor(const std::string& matrix_path, const std::string& out_path,
               std::ostream& out) {
    const Mat M = load_matrix(matrix_path);
    const Factorization f = factorize(make_symplectic(M));
    const Mat R = reconstruct(f).m;
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    const double rel_err = (R - M).cwiseAbs().maxCoeff() / scale;
    json j = factorization_to_json(f);
    j["reconstruction_error"] = rel_err;
    out << j.dump(2) << "\n";
    if (!out_path.empty()) write_json_file(j, out_path);
    return 0;
}

json dense_rows(const Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

int run_norm(const std::string& matrix_path, double eps, const std::string& p,
             const std::string& q, std::ostream& out) {
    const SymplecticMatrix S = make_symplectic(load_matrix(matrix_path));
    const ExponentPair e = exponents_from(p, q);
    const NormValue nv = mixed_norm_dilated(S, eps, e);
    const QuadraticFormTriple t = sigma_beta_omega(make_witness(S, eps));
    json j;
    j["value"] = nv.value;
    j["log_value"] = nv.log_value;
    j["sigma"] = dense_rows(t.Sigma);  // d x d, not a symplectic layout
    j["omega"] = dense_rows(t.Omega);
    out << j.dump(2) << "\n";
    return 0;
}

int run_sweep_cmd(const std::string& config_path, std::ostream& out) {
    const SweepConfig cfg = sweep_config_from_json(load_json_file(config_path));
    const SweepReport rep = run_sweep(cfg);
    write_sweep_outputs(cfg, rep);
    if (cfg.csv_out.empty()) out << sweep_csv(rep);
    if (cfg.report_out.empty())
        out << sweep_report_json(cfg, rep).dump(2) << "\n";
    return 0;
}

// ---- verify: covariance + oracle-agreement self checks ---------------------

struct VerifyCheck {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

VerifyCheck covariance_check(const std::string& name, const Mat& M,
                             const GridSpec& grid) {
    const SampledSignal f = gaussian_signal(grid, 1.2);
    const SampledSignal g = gaussian_signal(grid);
    const double dev = check_symplectic_covariance(
        f, g, factorize(make_symplectic(M)), Exec::Parallel);
    return VerifyCheck{"covariance_" + name, dev, 1e-3, dev <= 1e-3};
}

int run_verify(int n, double T, const std::string& out_path,
               std::ostream& out) {
    const GridSpec grid = make_grid(1, n, T);
    std::vector<VerifyCheck> checks;

    // 1. ambiguity covariance for each generator kind, d = 1
    Mat P1(1, 1), Q1(1, 1), L2(1, 1);
    P1 << 1.0;
    Q1 << 1.0;
    L2 << 2.0;
    checks.push_back(covariance_check("standard", gen_standard(1).m, grid));
    checks.push_back(covariance_check("freq_shear", gen_freq_shear(P1).m, grid));
    checks.push_back(covariance_check("chirp", gen_chirp(Q1).m, grid));
    checks.push_back(covariance_check("dilation", gen_dilation(L2).m, grid));
    checks.push_back(
        covariance_check("swap", gen_swap_product(1, {1}).m, grid));

    // 2. closed-form ambiguity against the discrete transform
    {
        const double eps = 2.0;
        const SampledSignal f =
            gaussian_signal(grid, std::sqrt(eps * eps - 1.0));
        const SampledSignal g = gaussian_signal(grid);
        const SampledField A = discrete_ambiguity(f, g, Exec::Parallel);
        double dev = 0.0;
        Vec x(1), w(1);
        for (int s = 0; s < grid.n; ++s)
            for (int m = 0; m < grid.n; ++m) {
                x[0] = grid.point(s);
                w[0] = grid.point(m);
                const cplx want = ambiguity_gaussian(eps, 1, x, w);
                dev = std::max(
                    dev,
                    std::abs(A.v[static_cast<std::size_t>(s) * grid.n + m] -
                             want));
            }
        checks.push_back(VerifyCheck{"ambiguity_oracle", dev, 1e-3, dev <= 1e-3});
    }

    // 3. grid mixed norm against the closed form, S = I, (p,q) = (1,2)
    {
        const double eps = 1.5;
        const SymplecticMatrix S = gen_identity(1);
        const GaussianWitness w = make_witness(S, eps);
        const SampledField F = make_field(grid, [&](const Vec& z) {
            return cplx(witness_profile_value(w, z), 0.0);
        });
        const ExponentPair e{Exponent::finite(1.0), Exponent::finite(2.0)};
        const double grid_norm = mixed_grid_norm(F, e);
        const NormValue exact = mixed_norm_dilated(S, eps, e);
        const double rel = std::abs(grid_norm - exact.value) / exact.value;
        checks.push_back(VerifyCheck{"mixed_norm_oracle", rel, 1e-2, rel <= 1e-2});
    }

    // 4. twisted delta identity on a reduced grid
    {
        const GridSpec small = make_grid(1, std::min(n, 128), T);
        const SampledSignal f = gaussian_signal(small, 1.3);
        const SampledSignal g = gaussian_signal(small);
        const SampledField F = discrete_ambiguity(f, g, Exec::Parallel);
        SampledField delta = zero_field(small);
        const double cell = small.h() * small.h();
        const std::size_t mid =
            (static_cast<std::size_t>(small.n / 2)) * small.n + small.n / 2;
        delta.v[mid] = cplx(1.0 / cell, 0.0);
        const SampledField conv = twisted_convolution(F, delta, Exec::Parallel);
        const double dev = max_abs_diff(conv.v, F.v);
        checks.push_back(VerifyCheck{"twisted_delta", dev, 1e-10, dev <= 1e-10});
    }

    // 5. Toeplitz with unit symbol reproduces the reproducing identity
    {
        const SampledSignal f = gaussian_signal(grid, 1.3);
        const SampledSignal g = gaussian_signal(grid);
        SampledField one = zero_field(grid);
        for (auto& z : one.v) z = cplx(1.0, 0.0);
        const SampledSignal h = toeplitz_apply(one, g, f, Exec::Parallel);
        const double g2 = signal_l2_norm(g);
        double dev = 0.0;
        for (std::size_t i = 0; i < h.v.size(); ++i)
            dev = std::max(dev, std::abs(h.v[i] / (g2 * g2) - f.v[i]));
        checks.push_back(VerifyCheck{"toeplitz_unit", dev, 1e-3, dev <= 1e-3});
    }

    bool all = true;
    json rows = json::array();
    for (const VerifyCheck& c : checks) {
        all = all && c.pass;
        json r;
        r["name"] = c.name;
        r["value"] = c.value;
        r["tolerance"] = c.tolerance;
        r["pass"] = c.pass;
        rows.push_back(std::move(r));
    }
    json rep;
    rep["schema"] = 1;
    rep["n"] = n;
    rep["T"] = T;
    rep["checks"] = std::move(rows);
    rep["pass"] = all;
    out << rep.dump(2) << "\n";
    if (!out_path.empty()) write_json_file(rep, out_path);
    return all ? 0 : 2;
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"symplectic dilation analysis toolkit"};
    app.require_subcommand(1);

    std::string matrix_path, weight_path, p = "2", q = "2", out_path;
    std::string config_path;
    double eps = 2.0;
    int n = 512;
    double T = 16.0;

    CLI::App* check = app.add_subcommand(
        "check", "classify the dilation for a symplectic matrix");
    check->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    check->add_option("--p", p, "inner exponent (>= 1 or 'inf')")->required();
    check->add_option("--q", q, "outer exponent (>= 1 or 'inf')")->required();
    check->add_option("--weight", weight_path, "weight JSON file");

    CLI::App* factor =
        app.add_subcommand("factor", "factor a symplectic matrix");
    factor->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    factor->add_option("--out", out_path, "write factorization JSON here");

    CLI::App* norm = app.add_subcommand(
        "norm", "closed-form mixed norm of the dilated Gaussian witness");
    norm->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    norm->add_option("--eps", eps, "witness parameter (> 1)")->required();
    norm->add_option("--p", p, "inner exponent")->required();
    norm->add_option("--q", q, "outer exponent")->required();

    CLI::App* sweep =
        app.add_subcommand("sweep", "epsilon sweep with exponent fit");
    sweep->add_option("--config", config_path, "sweep config JSON")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "run discrete/closed-form agreement self-checks");
    verify->add_option("--n", n, "samples per axis (power of two)");
    verify->add_option("--T", T, "domain side length");
    verify->add_option("--out", out_path, "write the JSON report here");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(check))
            return run_check(matrix_path, p, q, weight_path, out);
        if (app.got_subcommand(factor))
            return run_factor(matrix_path, out_path, out);
        if (app.got_subcommand(norm))
            return run_norm(matrix_path, eps, p, q, out);
        if (app.got_subcommand(sweep)) return run_sweep_cmd(config_path, out);
        if (app.got_subcommand(verify)) return run_verify(n, T, out_path, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace symdil
