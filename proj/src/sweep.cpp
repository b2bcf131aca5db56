// ============================================================================
// sweep.cpp -- the epsilon-sweep harness (see sweep.hpp for the witness-pair
// and fit-window conventions)
// ============================================================================
#include "symdil/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace symdil {

namespace {

Exponent exponent_from_json(const json& j, const char* key) {
    if (!j.contains(key))
        throw FormatError(std::string("sweep config: missing \"") + key + "\"");
    const json& v = j[key];
    if (v.is_string()) return parse_exponent(v.get<std::string>());
    if (v.is_number()) return Exponent::finite(v.get<double>());
    throw FormatError(std::string("sweep config: \"") + key +
                      "\" must be a number or \"inf\"");
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

SweepConfig sweep_config_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("sweep config: expected JSON object");
    SweepConfig cfg;

    if (!j.contains("matrix"))
        throw FormatError("sweep config: missing \"matrix\"");
    if (j["matrix"].is_string())
        cfg.matrix = load_matrix(j["matrix"].get<std::string>());
    else
        cfg.matrix = matrix_from_json_or_recipe(j["matrix"]);

    cfg.e.p = exponent_from_json(j, "p");
    cfg.e.q = exponent_from_json(j, "q");

    if (j.contains("weight")) {
        if (j["weight"].is_string())
            cfg.weight = load_weight(j["weight"].get<std::string>());
        else
            cfg.weight = weight_from_json(j["weight"]);
    }

    if (j.contains("eps_min")) cfg.eps_min = j["eps_min"].get<double>();
    if (j.contains("eps_max")) cfg.eps_max = j["eps_max"].get<double>();
    if (j.contains("eps_count")) cfg.eps_count = j["eps_count"].get<int>();
    if (j.contains("fit_window")) cfg.fit_window = j["fit_window"].get<double>();
    if (j.contains("csv_out")) cfg.csv_out = j["csv_out"].get<std::string>();
    if (j.contains("report_out"))
        cfg.report_out = j["report_out"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<long>();

    if (!(cfg.eps_min > 1.0))
        throw ValidationError("sweep config: eps_min must be > 1");
    if (!(cfg.eps_max > cfg.eps_min))
        throw ValidationError("sweep config: eps_max must exceed eps_min");
    if (cfg.eps_count < 2)
        throw ValidationError("sweep config: eps_count must be >= 2");
    if (!(cfg.fit_window > 0.0) || cfg.fit_window > 1.0)
        throw ValidationError("sweep config: fit_window must lie in (0, 1]");
    make_symplectic(cfg.matrix); // fail at parse time, not first use
    return cfg;
}

SweepReport run_sweep(const SweepConfig& cfg) {
    const SymplecticMatrix S = make_symplectic(cfg.matrix);
    const int d = S.d;

    const Verdict unweighted = classify_unweighted(S, cfg.e);
    SweepReport rep;
    rep.verdict = cfg.weight ? classify_weighted(S, cfg.e, *cfg.weight)
                             : unweighted;
    rep.predicted_exponent = unweighted.exponent;

    // witness pair from the reduced special form
    SymplecticMatrix base = gen_identity(d);
    SymplecticMatrix dilated = S;
    if (unweighted.status == Status::Unbounded) {
        const SpecialForm sf = reduce_special(S);
        std::vector<int> tail_axes;
        for (int i = sf.k + 1; i <= d; ++i) tail_axes.push_back(i);
        const SymplecticMatrix tail_inv =
            invert_symplectic(gen_swap_product(d, tail_axes));
        const double qscale =
            std::max(1.0, sf.Qprime.cwiseAbs().maxCoeff());
        const bool qprime_zero =
            sf.Qprime.cwiseAbs().maxCoeff() <= tols().rank * qscale;
        if (qprime_zero) {
            dilated = tail_inv;
        } else {
            const SymplecticMatrix chirp_inv = gen_chirp(-sf.Qprime);
            if (cfg.e.p.reciprocal() > cfg.e.q.reciprocal()) {  // p < q
                dilated = tail_inv;
                base = chirp_inv;
            } else {
                dilated = chirp_inv;
                base = tail_inv;
            }
        }
    }

    rep.rows.resize(static_cast<std::size_t>(cfg.eps_count));
    const double lg_min = std::log(cfg.eps_min);
    const double lg_max = std::log(cfg.eps_max);
    for (int i = 0; i < cfg.eps_count; ++i) {
        const double frac =
            static_cast<double>(i) / static_cast<double>(cfg.eps_count - 1);
        const double eps = std::exp(lg_min + frac * (lg_max - lg_min));
        SweepRow& row = rep.rows[static_cast<std::size_t>(i)];
        row.eps = eps;
        row.norm_base = mixed_norm_dilated(base, eps, cfg.e);
        row.norm_dilated = mixed_norm_dilated(dilated, eps, cfg.e);
    }

    // least-squares slope of log_ratio against log(eps^2 - 1) over the
    // window at the divergence end
    const int nrows = cfg.eps_count;
    int cnt = static_cast<int>(std::lround(cfg.fit_window * nrows));
    cnt = std::max(2, std::min(cnt, nrows));
    if (rep.predicted_exponent < 0.0) {
        rep.window_begin = 0;
        rep.window_end = cnt;
    } else {
        rep.window_begin = nrows - cnt;
        rep.window_end = nrows;
    }
    double sx = 0.0, sy = 0.0;
    for (int i = rep.window_begin; i < rep.window_end; ++i) {
        const SweepRow& row = rep.rows[static_cast<std::size_t>(i)];
        sx += std::log(row.eps * row.eps - 1.0);
        sy += row.log_ratio();
    }
    const double mx = sx / cnt, my = sy / cnt;
    double sxx = 0.0, sxy = 0.0;
    for (int i = rep.window_begin; i < rep.window_end; ++i) {
        const SweepRow& row = rep.rows[static_cast<std::size_t>(i)];
        const double dx = std::log(row.eps * row.eps - 1.0) - mx;
        sxx += dx * dx;
        sxy += dx * (row.log_ratio() - my);
    }
    if (!(sxx > 0.0))
        throw ValidationError("run_sweep: degenerate fit window");
    rep.fitted_exponent = sxy / sxx;
    rep.agreement =
        std::abs(rep.fitted_exponent - rep.predicted_exponent) <= tols().fit;
    return rep;
}

std::string sweep_csv(const SweepReport& rep) {
    std::string out = "eps,norm_base,norm_dilated,ratio,log_ratio\n";
    for (const SweepRow& row : rep.rows) {
        out += fmt17(row.eps);
        out += ',';
        out += fmt17(row.norm_base.value);
        out += ',';
        out += fmt17(row.norm_dilated.value);
        out += ',';
        out += fmt17(std::exp(row.log_ratio()));
        out += ',';
        out += fmt17(row.log_ratio());
        out += '\n';
    }
    return out;
}

json sweep_report_json(const SweepConfig& cfg, const SweepReport& rep) {
    json j;
    j["schema"] = 1;
    j["p"] = to_string(cfg.e.p);
    j["q"] = to_string(cfg.e.q);
    j["eps_min"] = cfg.eps_min;
    j["eps_max"] = cfg.eps_max;
    j["eps_count"] = cfg.eps_count;
    j["fit_window"] = cfg.fit_window;
    j["seed"] = cfg.seed;
    if (cfg.weight) j["weight"] = weight_to_json(*cfg.weight);
    j["fitted_exponent"] = rep.fitted_exponent;
    j["predicted_exponent"] = rep.predicted_exponent;
    j["agreement"] = rep.agreement;
    j["window"] = {rep.window_begin, rep.window_end};
    j["verdict"] = verdict_to_json(rep.verdict);
    json rows = json::array();
    for (const SweepRow& row : rep.rows) {
        json r;
        r["eps"] = row.eps;
        // plain values may round to +-inf for extreme eps (serialized as
        // null); the log fields are authoritative
        r["norm_base"] = row.norm_base.value;
        r["norm_dilated"] = row.norm_dilated.value;
        r["ratio"] = std::exp(row.log_ratio());
        r["log_ratio"] = row.log_ratio();
        r["log_norm_base"] = row.norm_base.log_value;
        r["log_norm_dilated"] = row.norm_dilated.log_value;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

void write_sweep_outputs(const SweepConfig& cfg, const SweepReport& rep) {
    if (!cfg.csv_out.empty()) {
        std::ofstream out(cfg.csv_out);
        if (!out) throw FormatError("cannot open for writing: " + cfg.csv_out);
        out << sweep_csv(rep);
    }
    if (!cfg.report_out.empty())
        write_json_file(sweep_report_json(cfg, rep), cfg.report_out);
}

} // namespace symdil
