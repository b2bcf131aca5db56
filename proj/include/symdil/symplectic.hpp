// ============================================================================
// symplectic.hpp -- symplectic matrices: construction, validation,
//                   generators, factorization, special-form reduction
//
// Conventions (d = half-dimension, matrices are 2d x 2d, blocks
// A = top-left, B = top-right, C = bottom-left, D = bottom-right):
//
//   J      = [[0, I], [-I, 0]]                (the standard form)
//   U_P    = [[I, P], [0, I]],  P symmetric   (frequency shear)
//   V_Q    = [[I, 0], [Q, I]],  Q symmetric   (spatial shear / chirp)
//   D_L    = [[L, 0], [0, L^-T]], L invertible (dilation)
//   Pi_i   = swaps coordinate i with its frequency partner i+d, with a
//            sign: e_i -> -e_{i+d}, e_{i+d} -> e_i, all others fixed.
//            Pi_{i+d} := Pi_i^T = Pi_i^{-1} covers indices d < i <= 2d.
//   J      = prod_{i=1..d} Pi_i, and all Pi_i commute.
//
// Every symplectic S factors as  S = prod_{i in J} Pi_i . V_Q D_L U_P  for
// some index set J (not unique).  factorize() returns the lexicographically
// smallest admissible axis set (subsets of {1..d} suffice: replacing i+d by
// i never breaks admissibility and is lexicographically smaller).
//
// reduce_special() normalizes the quasi-permutation part to a trailing
// product prod_{i=k+1..d} Pi_i by conjugating with an axis permutation
//
//   prod_{i in I} Pi_i = diag(R,R) . prod_{i=k+1..d} Pi_i . diag(R,R)^T,
//
// which shears Q into Q' = R^T Q R and leaves bounded prefactor diag(R,R)
// and postfactor diag(R,R)^T D_L U_P.  (A prefactor alone cannot do this:
// conjugation is required for the axis relabeling to hold as matrix
// algebra; the postfactor is absorbed into the dilation-shear tail.)
// ============================================================================
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "symdil/common.hpp"

namespace symdil {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// the standard form J (2d x 2d)
Mat standard_form(int d);

// max-norm test of M^T J M = J; tol is absolute on the entries
bool is_symplectic(const Mat& M, double tol);

struct SymplecticMatrix {
    int d = 1;
    Mat m;  // 2d x 2d

    Eigen::Block<const Mat> A() const { return m.block(0, 0, d, d); }
    Eigen::Block<const Mat> B() const { return m.block(0, d, d, d); }
    Eigen::Block<const Mat> C() const { return m.block(d, 0, d, d); }
    Eigen::Block<const Mat> D() const { return m.block(d, d, d, d); }
};

// validate and wrap; tolerance is relative to max(1, ||M||_max^2)
SymplecticMatrix make_symplectic(const Mat& M);
SymplecticMatrix make_symplectic(const Mat& M, double rel_tol);

// ----------------------------------------------------------------------------
// generators
// ----------------------------------------------------------------------------

SymplecticMatrix gen_freq_shear(const Mat& P);    // U_P
SymplecticMatrix gen_chirp(const Mat& Q);         // V_Q
SymplecticMatrix gen_dilation(const Mat& L);      // D_L
SymplecticMatrix gen_swap(int d, int i);          // Pi_i, 1 <= i <= 2d
SymplecticMatrix gen_swap_product(int d, const std::vector<int>& axes);
SymplecticMatrix gen_standard(int d);             // J as a SymplecticMatrix
SymplecticMatrix gen_identity(int d);

// C block within tolerance of zero (absolute max-norm, like is_symplectic)
bool is_upper_block_triangular(const SymplecticMatrix& S, double tol);

// S^{-1} = J^{-1} S^T J = [[D^T, -B^T], [-C^T, A^T]]
SymplecticMatrix invert_symplectic(const SymplecticMatrix& S);

SymplecticMatrix multiply(const SymplecticMatrix& a, const SymplecticMatrix& b);

// ----------------------------------------------------------------------------
// factorization  S = prod_{i in J} Pi_i . V_Q D_L U_P
// ----------------------------------------------------------------------------

struct Factorization {
    int d = 1;
    std::vector<int> index_set;  // strictly increasing, subset of {1..d}
    Mat Q;                       // symmetric
    Mat L;                       // invertible
    Mat P;                       // symmetric
};

// lexicographically smallest admissible index set, then
//   L = T11, Q = T21 L^{-1}, P = L^{-1} T12   for T = (prod Pi)^{-1} S.
// Throws ValidationError for non-symplectic input and Error when no
// admissible pivot set exists within the rank tolerance.
Factorization factorize(const SymplecticMatrix& S);

SymplecticMatrix reconstruct(const Factorization& f);

// ----------------------------------------------------------------------------
// special-form reduction (trailing swap product + single shear)
// ----------------------------------------------------------------------------

enum class SpecialVariant { PiThenVQ, VQThenPi };

// PiThenVQ:  encoded = prod_{i=k+1..d} Pi_i . V_Q'  and
//            source = residual . encoded . tail,
//            residual = diag(R,R), tail = D_{R^T L} U_P.
// VQThenPi:  encoded = V_Q'' . prod_{i=k+1..d} Pi_i  with
//            residual . encoded = (PiThenVQ encoded)^{-1}
//            (the inverse special form of the same source; tail = identity).
//            Q'' = -M Q' M for the sign matrix M = diag(I_k, -I_{d-k}).
struct SpecialForm {
    SpecialVariant variant = SpecialVariant::PiThenVQ;
    int d = 1;
    int k = 0;                  // number of leading unswapped axes
    Mat Qprime;                 // symmetric d x d
    SymplecticMatrix residual;  // bounded prefactor
    SymplecticMatrix tail;      // bounded postfactor (identity for VQThenPi)
    SymplecticMatrix reduced_source;  // == residual * encoded()
};

SpecialForm reduce_special(const SymplecticMatrix& S,
                           SpecialVariant variant = SpecialVariant::PiThenVQ);

// the encoded matrix S' (or S'') itself
SymplecticMatrix special_encoded(const SpecialForm& f);

// eigenvalues of Qprime sorted by descending absolute value
std::vector<double> qprime_spectrum(const Mat& Qprime);

} // namespace symdil
