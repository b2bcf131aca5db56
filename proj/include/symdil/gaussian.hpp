// ============================================================================
// gaussian.hpp -- closed forms for the dilated-Gaussian witness family
//
// Profile conventions (all d-dimensional, E = eps*I, eps > 1):
//
//   g(t)      = exp(-pi |t|^2)                (unnormalized Gaussian)
//   Delta^2   = (1 - eps^{-2}) I,  E^{-2} = eps^{-2} I,  Delta^2 + E^{-2} = I
//   f(x, w)   = exp(-pi x.Delta^2 x) exp(-pi w.E^{-2} w)
//
// f is (up to the unimodular phase and the |det E|^{-1} constant) the
// ambiguity function of the dilated Gaussian g((eps^2-1)^{1/2} t) against
// g, and the mixed (p,q) norm of f o S^{-1} has the exact value
//
//   || f o S^{-1} ||_{p,q} = |det(p Sigma)|^{-1/2p} |det(q Omega)|^{-1/2q}
//
// with, writing A,B,C,D for the blocks of S^{-1},
//
//   Sigma = A^T Delta^2 A + C^T E^{-2} C
//   beta  = B^T Delta^2 A + D^T E^{-2} C
//   Omega = B^T Delta^2 B + D^T E^{-2} D - beta Sigma^{-1} beta^T
//
// and the convention a^{+-1/inf} := 1 (an infinite exponent drops its
// determinant factor; the sup over x is attained at x = -Sigma^{-1} beta^T w).
// Values are carried in log space: (eps^2-1) powers leave double range
// quickly.
// ============================================================================
#pragma once

#include <complex>

#include "symdil/exponents.hpp"
#include "symdil/symplectic.hpp"

namespace symdil {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;

// integral of exp(-pi x.Ax + 2 pi beta.x) over R^n:
//   |det A|^{-1/2} exp(pi beta.A^{-1} beta)
// A must be symmetric strictly positive definite (DomainError otherwise);
// the complex-beta overload extends bilinearly (beta.A^{-1}beta without
// conjugation).
double gaussian_integral(const Mat& A);
double gaussian_integral(const Mat& A, const Vec& beta);
cplx gaussian_integral(const Mat& A, const CVec& beta);

// ambiguity function of the dilated Gaussian pair at (x, w):
//   |det E|^{-1} e^{pi i x.w - 2 pi i w.E^{-2}x} e^{-pi x.Delta^2 x - pi w.E^{-2} w}
cplx ambiguity_gaussian(double eps, int d, const Vec& x, const Vec& w);

struct GaussianWitness {
    double eps = 2.0;
    int d = 1;
    SymplecticMatrix Sinv;  // blocks A,B,C,D below are of this matrix
    double delta2 = 0.75;   // 1 - eps^{-2}
    double einv2 = 0.25;    // eps^{-2}
};

GaussianWitness make_witness(const SymplecticMatrix& S, double eps);

struct QuadraticFormTriple {
    Mat Sigma;
    Mat beta;
    Mat Omega;
};

QuadraticFormTriple sigma_beta_omega(const GaussianWitness& w);

// pointwise value of the dilated witness profile (f o S^{-1})(z) for
// f(x,w) = e^{-pi x.Delta^2 x} e^{-pi w.E^{-2} w} -- the exact function whose
// grid mixed norm the closed form predicts
double witness_profile_value(const GaussianWitness& w, const Vec& z);

// exact mixed norm || f o S^{-1} ||_{p,q}
NormValue mixed_norm_dilated(const SymplecticMatrix& S, double eps,
                             const ExponentPair& e);

// The closed-form witness norm ratio certifying the verdict for the reduced
// form (p != q):
//   Q' = 0:   (eps^2-1)^{(d-k)(1/2p-1/2q)}          (signed; exact at all eps)
//   Q' != 0:  [ prod_{i<=k} (1 + L_i^2/(eps^2-1)) .
//              prod_{i>k}  (L_i^2 + eps^2-1) ]^{|1/2p - 1/2q|}
// where L are the eigenvalues of Q' in descending absolute value.  This is
// the ratio ||f o P||/||f o V_{Q'}|| (swap product P) oriented so that it
// diverges; the two products rearrange the single canonical expression
// prod_i (u + L_i^2) / u^k with u = eps^2-1.
NormValue case_ratio(const SpecialForm& special, double eps, const ExponentPair& e);

} // namespace symdil
