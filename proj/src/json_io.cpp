// ============================================================================
// json_io.cpp -- interchange-format serializers (see json_io.hpp)
// ============================================================================
#include "symdil/json_io.hpp"

#include <fstream>

namespace symdil {

namespace {

json dense_rows(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat rows_to_matrix(const json& rows, const char* what) {
    if (!rows.is_array() || rows.empty())
        throw FormatError(std::string(what) + ": rows must be a non-empty array");
    const auto nr = rows.size();
    const auto nc = rows[0].is_array() ? rows[0].size() : 0;
    if (nc == 0)
        throw FormatError(std::string(what) + ": rows must contain arrays");
    Mat m(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(nc));
    for (std::size_t r = 0; r < nr; ++r) {
        if (!rows[r].is_array() || rows[r].size() != nc)
            throw FormatError(std::string(what) + ": ragged rows");
        for (std::size_t c = 0; c < nc; ++c) {
            if (!rows[r][c].is_number())
                throw FormatError(std::string(what) + ": non-numeric entry");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rows[r][c].get<double>();
        }
    }
    return m;
}

int require_int(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw FormatError(std::string(what) + ": missing integer \"" + key + "\"");
    return j[key].get<int>();
}

double require_num(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number())
        throw FormatError(std::string(what) + ": missing number \"" + key + "\"");
    return j[key].get<double>();
}

} // namespace

json matrix_to_json(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw ValidationError("matrix_to_json: expected square 2d x 2d matrix");
    json j;
    j["d"] = static_cast<int>(m.rows() / 2);
    j["rows"] = dense_rows(m);
    return j;
}

Mat matrix_from_json(const json& j) {
    int d = require_int(j, "d", "matrix");
    if (d < 1) throw FormatError("matrix: d must be >= 1");
    if (!j.contains("rows")) throw FormatError("matrix: missing \"rows\"");
    Mat m = rows_to_matrix(j["rows"], "matrix");
    if (m.rows() != 2 * d || m.cols() != 2 * d)
        throw FormatError("matrix: rows shape disagrees with d");
    return m;
}

Mat matrix_from_json_or_recipe(const json& j) {
    if (!j.is_object()) throw FormatError("matrix: expected JSON object");
    if (j.contains("rows")) return matrix_from_json(j);
    if (!j.contains("generator"))
        throw FormatError("matrix: need \"rows\" or \"generator\"");
    const std::string g = j["generator"].get<std::string>();
    int d = require_int(j, "d", "matrix recipe");
    if (d < 1) throw FormatError("matrix recipe: d must be >= 1");
    if (g == "identity") return gen_identity(d).m;
    if (g == "standard") return gen_standard(d).m;
    if (g == "chirp") {
        Mat Q = rows_to_matrix(j.at("Q"), "matrix recipe Q");
        if (Q.rows() != d || Q.cols() != d)
            throw FormatError("matrix recipe: Q must be d x d");
        return gen_chirp(Q).m;
    }
    if (g == "freq_shear") {
        Mat P = rows_to_matrix(j.at("P"), "matrix recipe P");
        if (P.rows() != d || P.cols() != d)
            throw FormatError("matrix recipe: P must be d x d");
        return gen_freq_shear(P).m;
    }
    if (g == "dilation") {
        Mat L = rows_to_matrix(j.at("L"), "matrix recipe L");
        if (L.rows() != d || L.cols() != d)
            throw FormatError("matrix recipe: L must be d x d");
        return gen_dilation(L).m;
    }
    if (g == "swap_product") {
        if (!j.contains("axes") || !j["axes"].is_array())
            throw FormatError("matrix recipe: swap_product needs \"axes\"");
        std::vector<int> axes;
        for (const auto& a : j["axes"]) axes.push_back(a.get<int>());
        return gen_swap_product(d, axes).m;
    }
    throw FormatError("matrix recipe: unknown generator \"" + g + "\"");
}

Mat load_matrix(const std::string& path) {
    return matrix_from_json_or_recipe(load_json_file(path));
}

json weight_to_json(const WeightSpec& w) {
    json j;
    switch (w.family) {
        case WeightFamily::RadialLog: j["family"] = "radial_log"; break;
        case WeightFamily::Spatial: j["family"] = "spatial"; break;
        case WeightFamily::Frequency: j["family"] = "frequency"; break;
    }
    j["s"] = w.s;
    j["t"] = w.t;
    j["d"] = w.d;
    return j;
}

WeightSpec weight_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw FormatError("weight: missing \"family\"");
    const std::string fam = j["family"].get<std::string>();
    WeightFamily f;
    if (fam == "radial_log") f = WeightFamily::RadialLog;
    else if (fam == "spatial") f = WeightFamily::Spatial;
    else if (fam == "frequency") f = WeightFamily::Frequency;
    else throw FormatError("weight: unknown family \"" + fam + "\"");
    double s = j.contains("s") ? require_num(j, "s", "weight") : 0.0;
    double t = j.contains("t") ? require_num(j, "t", "weight") : 0.0;
    int d = require_int(j, "d", "weight");
    return make_weight(f, s, t, d);
}

WeightSpec load_weight(const std::string& path) {
    return weight_from_json(load_json_file(path));
}

json factorization_to_json(const Factorization& f) {
    json j;
    j["d"] = f.d;
    j["index_set"] = f.index_set;
    j["Q"] = dense_rows(f.Q);
    j["L"] = dense_rows(f.L);
    j["P"] = dense_rows(f.P);
    return j;
}

Factorization factorization_from_json(const json& j) {
    Factorization f;
    f.d = require_int(j, "d", "factorization");
    if (f.d < 1) throw FormatError("factorization: d must be >= 1");
    if (!j.contains("index_set") || !j["index_set"].is_array())
        throw FormatError("factorization: missing \"index_set\"");
    for (const auto& i : j["index_set"]) f.index_set.push_back(i.get<int>());
    f.Q = rows_to_matrix(j.at("Q"), "factorization Q");
    f.L = rows_to_matrix(j.at("L"), "factorization L");
    f.P = rows_to_matrix(j.at("P"), "factorization P");
    if (f.Q.rows() != f.d || f.Q.cols() != f.d || f.L.rows() != f.d ||
        f.L.cols() != f.d || f.P.rows() != f.d || f.P.cols() != f.d)
        throw FormatError("factorization: block shapes disagree with d");
    return f;
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["reason"] = to_string(v.reason);
    j["k"] = v.k;
    j["exponent"] = v.exponent;
    if (!v.details.empty()) j["details"] = v.details;
    if (v.norm_factor) j["norm_factor"] = *v.norm_factor;
    if (!v.qprime_eigs.empty()) j["qprime_eigenvalues"] = v.qprime_eigs;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw FormatError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

} // namespace symdil
