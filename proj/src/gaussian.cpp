#include "symdil/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace symdil {

namespace {

constexpr double kPi = std::numbers::pi;

// Cholesky of a symmetric strictly-positive-definite matrix; DomainError
// otherwise.  Returns the factorization for reuse (solves, log-det).
Eigen::LLT<Mat> spd_cholesky(const Mat& A, const char* what) {
    if (A.rows() != A.cols())
        throw ValidationError(std::string(what) + ": matrix must be square");
    const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > tols().validate * scale)
        throw ValidationError(std::string(what) + ": matrix must be symmetric");
    Eigen::LLT<Mat> llt(0.5 * (A + A.transpose()));
    bool ok = llt.info() == Eigen::Success;
    if (ok) {
        const Mat L = llt.matrixL();
        for (int i = 0; i < L.rows(); ++i)
            if (!(L(i, i) > 0.0) || !std::isfinite(L(i, i))) ok = false;
    }
    if (!ok)
        throw DomainError(std::string(what) +
                          ": quadratic form is not strictly positive definite");
    return llt;
}

double log_det_from_llt(const Eigen::LLT<Mat>& llt) {
    double s = 0.0;
    const Mat L = llt.matrixL();
    for (int i = 0; i < L.rows(); ++i) s += std::log(L(i, i));
    return 2.0 * s;
}

} // namespace

double gaussian_integral(const Mat& A) {
    return gaussian_integral(A, Vec(Vec::Zero(A.rows())));
}

double gaussian_integral(const Mat& A, const Vec& beta) {
    auto llt = spd_cholesky(A, "gaussian_integral");
    if (beta.size() != A.rows())
        throw ValidationError("gaussian_integral: beta dimension mismatch");
    const Vec sol = llt.solve(beta);
    return std::exp(-0.5 * log_det_from_llt(llt) + kPi * beta.dot(sol));
}

cplx gaussian_integral(const Mat& A, const CVec& beta) {
    auto llt = spd_cholesky(A, "gaussian_integral");
    if (beta.size() != A.rows())
        throw ValidationError("gaussian_integral: beta dimension mismatch");
    // bilinear (not sesquilinear) extension: solve for real and imaginary
    // parts separately and combine beta . A^{-1} beta
    const Vec br = beta.real(), bi = beta.imag();
    const Vec sr = llt.solve(br), si = llt.solve(bi);
    const cplx quad(br.dot(sr) - bi.dot(si), br.dot(si) + bi.dot(sr));
    return std::exp(cplx(-0.5 * log_det_from_llt(llt), 0.0) + kPi * quad);
}

cplx ambiguity_gaussian(double eps, int d, const Vec& x, const Vec& w) {
    if (!(eps > 1.0)) throw DomainError("ambiguity_gaussian: eps must exceed 1");
    if (x.size() != d || w.size() != d)
        throw ValidationError("ambiguity_gaussian: x and w must lie in R^d");
    const double einv2 = 1.0 / (eps * eps);
    const double delta2 = 1.0 - einv2;
    const double re = -kPi * (delta2 * x.squaredNorm() + einv2 * w.squaredNorm());
    const double im = kPi * x.dot(w) - 2.0 * kPi * einv2 * w.dot(x);
    return std::pow(eps, -d) * std::exp(cplx(re, im));
}

GaussianWitness make_witness(const SymplecticMatrix& S, double eps) {
    if (!(eps > 1.0)) throw DomainError("make_witness: eps must exceed 1");
    GaussianWitness w;
    w.eps = eps;
    w.d = S.d;
    w.Sinv = invert_symplectic(S);
    w.einv2 = 1.0 / (eps * eps);
    w.delta2 = 1.0 - w.einv2;
    return w;
}

QuadraticFormTriple sigma_beta_omega(const GaussianWitness& w) {
    const Mat A = w.Sinv.A(), B = w.Sinv.B(), C = w.Sinv.C(), D = w.Sinv.D();
    QuadraticFormTriple t;
    t.Sigma = w.delta2 * A.transpose() * A + w.einv2 * C.transpose() * C;
    t.Sigma = 0.5 * (t.Sigma + t.Sigma.transpose()).eval();
    t.beta = w.delta2 * B.transpose() * A + w.einv2 * D.transpose() * C;
    Mat gamma = w.delta2 * B.transpose() * B + w.einv2 * D.transpose() * D;

    auto llt = spd_cholesky(t.Sigma, "sigma_beta_omega: Sigma");
    t.Omega = gamma - t.beta * llt.solve(t.beta.transpose());
    t.Omega = 0.5 * (t.Omega + t.Omega.transpose()).eval();
    return t;
}

NormValue mixed_norm_dilated(const SymplecticMatrix& S, double eps,
                             const ExponentPair& e) {
    const GaussianWitness w = make_witness(S, eps);
    const QuadraticFormTriple t = sigma_beta_omega(w);
    double lg = 0.0;
    if (!e.p.inf) {
        auto llt = spd_cholesky(Mat(e.p.v * t.Sigma), "mixed_norm_dilated: p Sigma");
        lg -= e.p.half_inv() * log_det_from_llt(llt);
    }
    if (!e.q.inf) {
        auto llt = spd_cholesky(Mat(e.q.v * t.Omega), "mixed_norm_dilated: q Omega");
        lg -= e.q.half_inv() * log_det_from_llt(llt);
    }
    return NormValue::from_log(lg);
}

double witness_profile_value(const GaussianWitness& w, const Vec& z) {
    if (z.size() != 2 * w.d)
        throw ValidationError("witness_profile_value: coordinate rank mismatch");
    const Vec y = w.Sinv.m * z;
    double qx = 0.0, qw = 0.0;
    for (int a = 0; a < w.d; ++a) {
        qx += y[a] * y[a];
        qw += y[w.d + a] * y[w.d + a];
    }
    const double pi = 3.14159265358979323846;
    return std::exp(-pi * (w.delta2 * qx + w.einv2 * qw));
}

NormValue case_ratio(const SpecialForm& special, double eps, const ExponentPair& e) {
    if (e.equal()) throw DomainError("case_ratio: degenerate for p = q");
    if (!(eps > 1.0)) throw DomainError("case_ratio: eps must exceed 1");
    const double u = eps * eps - 1.0;
    const int d = special.d, k = special.k;

    const std::vector<double> eigs = qprime_spectrum(special.Qprime);
    const double qscale = std::max(1.0, special.Qprime.cwiseAbs().maxCoeff());
    bool qprime_zero = true;
    for (double v : eigs)
        if (std::abs(v) > tols().rank * qscale) qprime_zero = false;

    if (qprime_zero) {
        const double expo = (d - k) * (e.p.half_inv() - e.q.half_inv());
        return NormValue::from_log(expo * std::log(u));
    }

    const double sigma = std::abs(e.p.half_inv() - e.q.half_inv());
    double lg = 0.0;
    for (int i = 0; i < d; ++i) {
        const double l2 = eigs[i] * eigs[i];
        lg += (i < k) ? std::log1p(l2 / u) : std::log(l2 + u);
    }
    return NormValue::from_log(sigma * lg);
}

} // namespace symdil
