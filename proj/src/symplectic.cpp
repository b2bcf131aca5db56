#include "symdil/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace symdil {

Mat standard_form(int d) {
    if (d < 1) throw ValidationError("standard_form: d must be positive");
    Mat J = Mat::Zero(2 * d, 2 * d);
    J.block(0, d, d, d) = Mat::Identity(d, d);
    J.block(d, 0, d, d) = -Mat::Identity(d, d);
    return J;
}

bool is_symplectic(const Mat& M, double tol) {
    if (M.rows() != M.cols() || M.rows() % 2 != 0 || M.rows() == 0)
        throw ValidationError("is_symplectic: matrix must be square with even side");
    if (!(tol > 0)) throw ValidationError("is_symplectic: tol must be positive");
    const int d = static_cast<int>(M.rows()) / 2;
    const Mat J = standard_form(d);
    return ((M.transpose() * J * M - J).cwiseAbs().maxCoeff()) <= tol;
}

SymplecticMatrix make_symplectic(const Mat& M, double rel_tol) {
    if (M.rows() != M.cols() || M.rows() % 2 != 0 || M.rows() == 0)
        throw ValidationError("make_symplectic: matrix must be square with even side");
    const double scale = std::max(1.0, std::pow(M.cwiseAbs().maxCoeff(), 2));
    if (!is_symplectic(M, rel_tol * scale))
        throw ValidationError("make_symplectic: S^T J S != J beyond tolerance");
    return SymplecticMatrix{static_cast<int>(M.rows()) / 2, M};
}

SymplecticMatrix make_symplectic(const Mat& M) {
    return make_symplectic(M, tols().validate);
}

namespace {

void require_symmetric(const Mat& M, const char* what) {
    if (M.rows() != M.cols())
        throw ValidationError(std::string(what) + ": must be square");
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > tols().validate * scale)
        throw ValidationError(std::string(what) + ": must be symmetric");
}

} // namespace

SymplecticMatrix gen_freq_shear(const Mat& P) {
    require_symmetric(P, "gen_freq_shear: P");
    const int d = static_cast<int>(P.rows());
    Mat m = Mat::Identity(2 * d, 2 * d);
    m.block(0, d, d, d) = 0.5 * (P + P.transpose());
    return SymplecticMatrix{d, m};
}

SymplecticMatrix gen_chirp(const Mat& Q) {
    require_symmetric(Q, "gen_chirp: Q");
    const int d = static_cast<int>(Q.rows());
    Mat m = Mat::Identity(2 * d, 2 * d);
    m.block(d, 0, d, d) = 0.5 * (Q + Q.transpose());
    return SymplecticMatrix{d, m};
}

SymplecticMatrix gen_dilation(const Mat& L) {
    if (L.rows() != L.cols())
        throw ValidationError("gen_dilation: L must be square");
    const int d = static_cast<int>(L.rows());
    Eigen::FullPivLU<Mat> lu(L);
    lu.setThreshold(tols().rank);
    if (!lu.isInvertible())
        throw ValidationError("gen_dilation: L is singular within rank tolerance");
    Mat m = Mat::Zero(2 * d, 2 * d);
    m.block(0, 0, d, d) = L;
    m.block(d, d, d, d) = lu.inverse().transpose();
    return SymplecticMatrix{d, m};
}

SymplecticMatrix gen_swap(int d, int i) {
    if (d < 1) throw ValidationError("gen_swap: d must be positive");
    if (i < 1 || i > 2 * d)
        throw ValidationError("gen_swap: index must satisfy 1 <= i <= 2d");
    Mat m = Mat::Identity(2 * d, 2 * d);
    if (i <= d) {
        // column i -> -e_{i+d}, column i+d -> e_i
        const int a = i - 1, b = i - 1 + d;
        m(a, a) = 0; m(b, b) = 0;
        m(b, a) = -1;
        m(a, b) = 1;
    } else {
        // Pi_{i} = Pi_{i-d}^T
        const int a = i - d - 1, b = i - 1;
        m(a, a) = 0; m(b, b) = 0;
        m(b, a) = 1;
        m(a, b) = -1;
    }
    return SymplecticMatrix{d, m};
}

SymplecticMatrix gen_swap_product(int d, const std::vector<int>& axes) {
    Mat m = Mat::Identity(2 * d, 2 * d);
    for (int i : axes) m = m * gen_swap(d, i).m;
    return SymplecticMatrix{d, m};
}

SymplecticMatrix gen_standard(int d) {
    return SymplecticMatrix{d, standard_form(d)};
}

SymplecticMatrix gen_identity(int d) {
    if (d < 1) throw ValidationError("gen_identity: d must be positive");
    return SymplecticMatrix{d, Mat::Identity(2 * d, 2 * d)};
}

bool is_upper_block_triangular(const SymplecticMatrix& S, double tol) {
    return S.C().cwiseAbs().maxCoeff() <= tol;
}

SymplecticMatrix invert_symplectic(const SymplecticMatrix& S) {
    const int d = S.d;
    Mat inv(2 * d, 2 * d);
    inv.block(0, 0, d, d) = S.D().transpose();
    inv.block(0, d, d, d) = -S.B().transpose();
    inv.block(d, 0, d, d) = -S.C().transpose();
    inv.block(d, d, d, d) = S.A().transpose();
    return SymplecticMatrix{d, inv};
}

SymplecticMatrix multiply(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    if (a.d != b.d) throw ValidationError("multiply: dimension mismatch");
    return SymplecticMatrix{a.d, a.m * b.m};
}

// ----------------------------------------------------------------------------
// factorization
// ----------------------------------------------------------------------------

namespace {

// Apply (prod_{i in axes} Pi_i)^{-1} on the left of S, in place, via row
// operations: for each axis j, new_row_j = -old_row_{j+d},
// new_row_{j+d} = old_row_j.
void apply_inverse_swaps(Mat& M, const std::vector<int>& axes, int d) {
    for (int j : axes) {
        const int a = j - 1, b = j - 1 + d;
        Eigen::RowVectorXd ra = M.row(a);
        M.row(a) = -M.row(b);
        M.row(b) = ra;
    }
}

bool block_invertible(const Mat& T11) {
    const double scale = std::max(1.0, T11.cwiseAbs().maxCoeff());
    Eigen::FullPivLU<Mat> lu(T11);
    lu.setThreshold(tols().rank);
    if (!lu.isInvertible()) return false;
    // guard against pivots that pass the LU threshold but are tiny relative
    // to the block as a whole
    const Mat& U = lu.matrixLU();
    double min_pivot = std::abs(U(0, 0));
    for (int i = 1; i < U.rows(); ++i) min_pivot = std::min(min_pivot, std::abs(U(i, i)));
    return min_pivot > tols().rank * scale;
}

// depth-first enumeration of subsets of {1..d} in lexicographic order
// ({} < {1} < {1,2} < {1,3} < {2} < ...); returns true when an admissible
// set is found, leaving it in `chosen`.
bool find_lex_smallest_axes(const Mat& S, int d, std::vector<int>& chosen) {
    Mat T = S;
    apply_inverse_swaps(T, chosen, d);  // chosen starts empty: T = S
    if (block_invertible(T.block(0, 0, d, d))) return true;

    // recursive extension; re-derive T per candidate (d is small in practice)
    struct Walker {
        const Mat& S;
        int d;
        bool operator()(std::vector<int>& cur) const {
            const int last = cur.empty() ? 0 : cur.back();
            for (int nxt = last + 1; nxt <= d; ++nxt) {
                cur.push_back(nxt);
                Mat T = S;
                apply_inverse_swaps(T, cur, d);
                if (block_invertible(T.block(0, 0, d, d))) return true;
                if ((*this)(cur)) return true;
                cur.pop_back();
            }
            return false;
        }
    };
    return Walker{S, d}(chosen);
}

} // namespace

Factorization factorize(const SymplecticMatrix& S) {
    const int d = S.d;
    std::vector<int> axes;
    if (!find_lex_smallest_axes(S.m, d, axes))
        throw Error("factorize: no admissible swap set yields an invertible upper-left block");

    Mat T = S.m;
    apply_inverse_swaps(T, axes, d);

    const Mat T11 = T.block(0, 0, d, d);
    const Mat T12 = T.block(0, d, d, d);
    const Mat T21 = T.block(d, 0, d, d);

    const Mat L = T11;
    const Mat Linv = T11.fullPivLu().inverse();
    Mat Q = T21 * Linv;
    Mat P = Linv * T12;
    // for symplectic T these are symmetric up to roundoff; make it exact
    Q = 0.5 * (Q + Q.transpose()).eval();
    P = 0.5 * (P + P.transpose()).eval();

    Factorization f{d, axes, Q, L, P};

    const Mat R = reconstruct(f).m;
    const double scale = std::max(1.0, S.m.cwiseAbs().maxCoeff());
    if ((R - S.m).cwiseAbs().maxCoeff() > 1e3 * tols().validate * scale)
        throw Error("factorize: reconstruction check failed (input not symplectic enough?)");
    return f;
}

SymplecticMatrix reconstruct(const Factorization& f) {
    const int d = f.d;
    SymplecticMatrix out = gen_swap_product(d, f.index_set);
    out = multiply(out, gen_chirp(f.Q));
    out = multiply(out, gen_dilation(f.L));
    out = multiply(out, gen_freq_shear(f.P));
    return out;
}

// ----------------------------------------------------------------------------
// special-form reduction
// ----------------------------------------------------------------------------

namespace {

// permutation R with R e_{k+j} = e_{i_j} for the sorted swapped axes i_j and
// R e_m = e_{c_m} (m <= k) for the sorted unswapped axes c_m
Mat axis_permutation(int d, const std::vector<int>& swapped) {
    std::vector<bool> in_set(d + 1, false);
    for (int i : swapped) in_set[i] = true;
    std::vector<int> head, tail;
    for (int i = 1; i <= d; ++i) (in_set[i] ? tail : head).push_back(i);
    Mat R = Mat::Zero(d, d);
    const int k = static_cast<int>(head.size());
    for (int m = 0; m < k; ++m) R(head[m] - 1, m) = 1.0;
    for (int j = 0; j < static_cast<int>(tail.size()); ++j) R(tail[j] - 1, k + j) = 1.0;
    return R;
}

SymplecticMatrix block_diag_pair(const Mat& R) {
    const int d = static_cast<int>(R.rows());
    Mat m = Mat::Zero(2 * d, 2 * d);
    m.block(0, 0, d, d) = R;
    m.block(d, d, d, d) = R;
    return SymplecticMatrix{d, m};
}

std::vector<int> tail_axes(int d, int k) {
    std::vector<int> t;
    for (int i = k + 1; i <= d; ++i) t.push_back(i);
    return t;
}

} // namespace

SymplecticMatrix special_encoded(const SpecialForm& f) {
    SymplecticMatrix swaps = gen_swap_product(f.d, tail_axes(f.d, f.k));
    if (f.variant == SpecialVariant::PiThenVQ)
        return multiply(swaps, gen_chirp(f.Qprime));
    return multiply(gen_chirp(f.Qprime), swaps);
}

SpecialForm reduce_special(const SymplecticMatrix& S, SpecialVariant variant) {
    const Factorization fact = factorize(S);
    const int d = S.d;
    const int k = d - static_cast<int>(fact.index_set.size());

    const Mat R = axis_permutation(d, fact.index_set);
    Mat Qp = R.transpose() * fact.Q * R;
    Qp = 0.5 * (Qp + Qp.transpose()).eval();

    SpecialForm f;
    f.d = d;
    f.k = k;

    if (variant == SpecialVariant::PiThenVQ) {
        f.variant = SpecialVariant::PiThenVQ;
        f.Qprime = Qp;
        f.residual = block_diag_pair(R);
        // tail = D_{R^T L} U_P
        f.tail = multiply(gen_dilation(R.transpose() * fact.L), gen_freq_shear(fact.P));
        f.reduced_source = multiply(f.residual, special_encoded(f));
        return f;
    }

    // VQThenPi: the inverse of the PiThenVQ encoded matrix rewrites as
    //   (prod Pi . V_Q')^{-1} = V_{-Q'} prod Pi^T = D_M . V_{-M Q' M} prod Pi
    // with M = diag(I_k, -I_{d-k}).
    Vec mdiag = Vec::Ones(d);
    for (int i = k; i < d; ++i) mdiag(i) = -1.0;
    const Mat M = mdiag.asDiagonal();

    f.variant = SpecialVariant::VQThenPi;
    f.Qprime = (-(M * Qp * M)).eval();
    f.Qprime = 0.5 * (f.Qprime + f.Qprime.transpose()).eval();
    f.residual = gen_dilation(M);
    f.tail = gen_identity(d);
    f.reduced_source = multiply(f.residual, special_encoded(f));
    return f;
}

std::vector<double> qprime_spectrum(const Mat& Qprime) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (Qprime + Qprime.transpose()));
    if (es.info() != Eigen::Success)
        throw Error("qprime_spectrum: eigensolver failed");
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    return ev;
}

} // namespace symdil
