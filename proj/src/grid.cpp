// ============================================================================
// grid.cpp -- sampled-signal and sampled-field plumbing: construction,
//             indexing, and the binary + JSON-sidecar file format
// ============================================================================
#include "symdil/grid.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>

#include "json.hpp"

namespace symdil {

namespace {

std::size_t pow_size(int n, int exp) {
    std::size_t s = 1;
    for (int i = 0; i < exp; ++i) s *= static_cast<std::size_t>(n);
    return s;
}

void check_idx_len(const std::vector<int>& idx, std::size_t want,
                   const char* what) {
    if (idx.size() != want)
        throw ValidationError(std::string(what) + ": index rank mismatch");
}

} // namespace

int GridSpec::snap_index(double x) const {
    double j = x / h() + n / 2.0;
    double r = std::round(j);
    if (std::abs(j - r) > tols().snap * std::max(1.0, std::abs(j))) return -1;
    int ji = static_cast<int>(r);
    if (ji < 0 || ji >= n) return -1;
    return ji;
}

GridSpec make_grid(int d, int n, double T) {
    if (d < 1 || d > 2)
        throw ValidationError("grid: d must be 1 or 2");
    if (n < 2 || !is_pow2(static_cast<std::size_t>(n)))
        throw ValidationError("grid: n must be a power of two >= 2");
    if (!(T > 0.0) || !std::isfinite(T))
        throw ValidationError("grid: T must be positive and finite");
    return GridSpec{d, n, T};
}

GridSpec default_grid(int d) {
    if (d == 1) return make_grid(1, 512, 16.0);
    if (d == 2) return make_grid(2, 128, 12.0);
    throw ValidationError("grid: d must be 1 or 2");
}

std::size_t SampledSignal::size() const { return pow_size(g.n, g.d); }
std::size_t SampledField::size() const { return pow_size(g.n, 2 * g.d); }

std::size_t SampledSignal::index(const std::vector<int>& idx) const {
    check_idx_len(idx, static_cast<std::size_t>(g.d), "signal");
    std::size_t lin = 0;
    for (int a = 0; a < g.d; ++a) {
        if (idx[a] < 0 || idx[a] >= g.n)
            throw ValidationError("signal: index out of range");
        lin = lin * g.n + static_cast<std::size_t>(idx[a]);
    }
    return lin;
}

std::size_t SampledField::index(const std::vector<int>& idx) const {
    check_idx_len(idx, static_cast<std::size_t>(2 * g.d), "field");
    std::size_t lin = 0;
    for (int a = 0; a < 2 * g.d; ++a) {
        if (idx[a] < 0 || idx[a] >= g.n)
            throw ValidationError("field: index out of range");
        lin = lin * g.n + static_cast<std::size_t>(idx[a]);
    }
    return lin;
}

namespace {

// iterate all multi-indices of given rank over [0,n)^rank, row-major,
// calling fn(linear_index, coordinate_vector)
template <typename Fn>
void for_each_point(const GridSpec& g, int rank, Fn&& fn) {
    std::vector<int> idx(rank, 0);
    Vec z(rank);
    std::size_t total = pow_size(g.n, rank);
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rem = lin;
        for (int a = rank - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % g.n);
            rem /= g.n;
        }
        for (int a = 0; a < rank; ++a) z[a] = g.point(idx[a]);
        fn(lin, z);
    }
}

} // namespace

SampledSignal make_signal(const GridSpec& g,
                          const std::function<cplx(const Vec&)>& fn) {
    SampledSignal s;
    s.g = g;
    s.v.resize(pow_size(g.n, g.d));
    for_each_point(g, g.d, [&](std::size_t lin, const Vec& z) {
        s.v[lin] = fn(z);
    });
    return s;
}

SampledField make_field(const GridSpec& g,
                        const std::function<cplx(const Vec&)>& fn) {
    SampledField f;
    f.g = g;
    f.v.resize(pow_size(g.n, 2 * g.d));
    for_each_point(g, 2 * g.d, [&](std::size_t lin, const Vec& z) {
        f.v[lin] = fn(z);
    });
    return f;
}

SampledSignal zero_signal(const GridSpec& g) {
    SampledSignal s;
    s.g = g;
    s.v.assign(pow_size(g.n, g.d), cplx(0.0, 0.0));
    return s;
}

SampledField zero_field(const GridSpec& g) {
    SampledField f;
    f.g = g;
    f.v.assign(pow_size(g.n, 2 * g.d), cplx(0.0, 0.0));
    return f;
}

SampledSignal gaussian_signal(const GridSpec& g, double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw ValidationError("gaussian_signal: dilation must be positive");
    const double pi = 3.14159265358979323846;
    return make_signal(g, [&](const Vec& t) {
        return cplx(std::exp(-pi * a * a * t.squaredNorm()), 0.0);
    });
}

// ----------------------------------------------------------------------------
// file format: raw little-endian float64 interleaved (re, im), row-major,
// with a JSON sidecar carrying the geometry.  We only target little-endian
// hosts; the loader round-trips bytes through memcpy so alignment is safe.
// ----------------------------------------------------------------------------

namespace {

void write_raw(const cvec& v, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    std::vector<double> flat(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        flat[2 * i] = v[i].real();
        flat[2 * i + 1] = v[i].imag();
    }
    out.write(reinterpret_cast<const char*>(flat.data()),
              static_cast<std::streamsize>(flat.size() * sizeof(double)));
    if (!out) throw FormatError("short write: " + path);
}

cvec read_raw(const std::string& path, std::size_t count) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw FormatError("cannot open for reading: " + path);
    auto bytes = static_cast<std::size_t>(in.tellg());
    if (bytes != count * 2 * sizeof(double))
        throw FormatError("data size mismatch in " + path);
    in.seekg(0);
    std::vector<double> flat(2 * count);
    in.read(reinterpret_cast<char*>(flat.data()),
            static_cast<std::streamsize>(flat.size() * sizeof(double)));
    if (!in) throw FormatError("short read: " + path);
    cvec v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = cplx(flat[2 * i], flat[2 * i + 1]);
    return v;
}

void write_sidecar(const GridSpec& g, const char* kind,
                   const std::string& path) {
    nlohmann::json j;
    j["kind"] = kind;
    j["d"] = g.d;
    j["n"] = g.n;
    j["T"] = g.T;
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

GridSpec read_sidecar(const std::string& path, const char* kind) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open for reading: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw FormatError("bad sidecar " + path + ": " + e.what());
    }
    if (!j.contains("d") || !j.contains("n") || !j.contains("T"))
        throw FormatError("sidecar missing d/n/T: " + path);
    if (j.contains("kind") && j["kind"].is_string() &&
        j["kind"].get<std::string>() != kind)
        throw FormatError("sidecar kind mismatch in " + path);
    return make_grid(j["d"].get<int>(), j["n"].get<int>(),
                     j["T"].get<double>());
}

} // namespace

void write_signal(const SampledSignal& s, const std::string& data_path,
                  const std::string& sidecar_path) {
    write_sidecar(s.g, "signal", sidecar_path);
    write_raw(s.v, data_path);
}

SampledSignal read_signal(const std::string& data_path,
                          const std::string& sidecar_path) {
    SampledSignal s;
    s.g = read_sidecar(sidecar_path, "signal");
    s.v = read_raw(data_path, pow_size(s.g.n, s.g.d));
    return s;
}

void write_field(const SampledField& f, const std::string& data_path,
                 const std::string& sidecar_path) {
    write_sidecar(f.g, "field", sidecar_path);
    write_raw(f.v, data_path);
}

SampledField read_field(const std::string& data_path,
                        const std::string& sidecar_path) {
    SampledField f;
    f.g = read_sidecar(sidecar_path, "field");
    f.v = read_raw(data_path, pow_size(f.g.n, 2 * f.g.d));
    return f;
}

} // namespace symdil
