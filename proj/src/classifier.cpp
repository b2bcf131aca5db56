#include "symdil/classifier.hpp"

#include <cmath>

namespace symdil {

std::string to_string(Status s) {
    switch (s) {
        case Status::BoundedAutomorphism: return "bounded_automorphism";
        case Status::Unbounded:           return "unbounded";
        case Status::Inconclusive:        return "inconclusive";
    }
    throw Error("to_string(Status): unreachable");
}

std::string to_string(Reason r) {
    switch (r) {
        case Reason::PEqualsQ:             return "p_equals_q";
        case Reason::UpperBlockTriangular: return "upper_block_triangular";
        case Reason::NotUpperTriangular:   return "not_upper_triangular";
        case Reason::WeightTransferRm:     return "weight_transfer_rm";
        case Reason::WeightTransferTm:     return "weight_transfer_tm";
        case Reason::WeightEquivalence:    return "weight_equivalence";
        case Reason::OpenCase:             return "open_case";
    }
    throw Error("to_string(Reason): unreachable");
}

double blowup_exponent(int d, int k, const ExponentPair& e) {
    if (k < 0 || k > d) throw ValidationError("blowup_exponent: need 0 <= k <= d");
    if (e.equal()) throw DomainError("blowup_exponent: degenerate for p = q");
    return (d - k) * (e.p.half_inv() - e.q.half_inv());
}

namespace {

int count_nonzero(const std::vector<double>& eigs, double tol) {
    int r = 0;
    for (double v : eigs)
        if (std::abs(v) > tol) ++r;
    return r;
}

} // namespace

Verdict classify_unweighted(const SymplecticMatrix& S, const ExponentPair& e) {
    Verdict v;

    const SpecialForm red = reduce_special(S, SpecialVariant::PiThenVQ);
    v.k = red.k;
    v.qprime_eigs = qprime_spectrum(red.Qprime);

    const double scale = std::max(1.0, S.m.cwiseAbs().maxCoeff());
    const double tol = tols().validate * scale;

    if (e.equal()) {
        v.status = Status::BoundedAutomorphism;
        v.reason = Reason::PEqualsQ;
        v.norm_factor = 1.0; // |det S|^{1/p} with det S = 1
        v.details = "p = q: every symplectic change of variable preserves the norm";
        return v;
    }

    if (is_upper_block_triangular(S, tol)) {
        v.status = Status::BoundedAutomorphism;
        v.reason = Reason::UpperBlockTriangular;
        const double la = std::abs(S.A().determinant());
        const double ld = std::abs(S.D().determinant());
        v.norm_factor = std::pow(la, e.p.reciprocal()) * std::pow(ld, e.q.reciprocal());
        v.details = "C block vanishes: norm-preserving up to |det A|^{1/p} |det D|^{1/q}";
        return v;
    }

    v.status = Status::Unbounded;
    v.reason = Reason::NotUpperTriangular;
    const double sigma = std::abs(e.p.half_inv() - e.q.half_inv());
    const double qscale = std::max(1.0, red.Qprime.cwiseAbs().maxCoeff());
    const int r = count_nonzero(v.qprime_eigs, tols().rank * qscale);
    if (r == 0) {
        // pure swap-product witness: exact power law, signed exponent
        v.exponent = blowup_exponent(S.d, red.k, e);
        v.details = "witness ratio (eps^2-1)^{(d-k)(1/2p-1/2q)}";
    } else if (red.k < S.d) {
        v.exponent = (S.d - red.k) * sigma;
        v.details = "witness ratio grows like (eps^2-1)^{(d-k)|1/2p-1/2q|} as eps -> inf";
    } else {
        v.exponent = -static_cast<double>(r) * sigma;
        v.details = "witness ratio diverges like (eps^2-1)^{-r|1/2p-1/2q|} as eps -> 1";
    }
    return v;
}

Verdict classify_weighted(const SymplecticMatrix& S, const ExponentPair& e,
                          const WeightSpec& w) {
    if (w.d != S.d) throw ValidationError("classify_weighted: dimension mismatch");

    if (equivalence_under(w, S) == Equivalence::Equivalent) {
        Verdict v = classify_unweighted(S, e);
        v.reason = Reason::WeightEquivalence;
        v.details = "m ~ m o S^{-1}: weighted verdict transfers from the unweighted case";
        return v;
    }

    // spatial with B != 0 or frequency with C != 0: the ratio m/m o S^{-1}
    // is unbounded above and has infimum zero along explicit directions, so
    // neither transfer criterion applies and the question is open
    Verdict v = classify_unweighted(S, e);
    v.status = Status::Inconclusive;
    v.reason = Reason::OpenCase;
    v.details = "weight is not equivalent under S and neither transfer criterion applies";
    return v;
}

} // namespace symdil
