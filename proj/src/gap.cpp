#include "qsep/gap.hpp"

#include <cmath>
#include <string>

#include "qsep/criteria.hpp"

namespace qsep {

GapRepresentation gap_decompose(const DensityMatrix& rho) {
    const int d = rho.dim();
    const Spectrum& lambda = rho.spectrum();
    const HermitianEig& eig = rho.eig();

    GapRepresentation rep;
    rep.dims_ = rho.dims();
    rep.lambda_ = lambda;
    rep.residual_weight_ = d * lambda[d - 1];

    CMat projector = CMat::Zero(d, d);
    for (int j = 1; j <= d - 1; ++j) {
        projector += eig.vectors.col(j - 1) * eig.vectors.col(j - 1).adjoint();
        rep.mu_.push_back(j * (lambda[j - 1] - lambda[j]));
        CMat avg = projector / static_cast<double>(j);
        avg = 0.5 * (avg + avg.adjoint());
        rep.rho_hat_.push_back(make_density(avg, rho.dims()));
    }

    if (rep.residual_weight_ < 1.0) {
        // omega's eigenvalues are (l_i - l_d)/(1 - d*l_d): exactly PSD and
        // unit trace by construction.
        RVec shifted(d);
        for (int i = 0; i < d; ++i) {
            shifted[i] = (lambda[i] - lambda[d - 1]) / (1.0 - rep.residual_weight_);
        }
        rep.omega_matrix_ = eig.vectors * shifted.asDiagonal() * eig.vectors.adjoint();
    }
    return rep;
}

DensityMatrix GapRepresentation::omega() const {
    const int d = dims_.total();
    if (lambda_[d - 1] >= 1.0 / d - kBoundaryTol) {
        throw DegenerateTau("omega: l_d = " + std::to_string(lambda_[d - 1]) +
                            " leaves no gap mixture (state is tau)");
    }
    return make_density(omega_matrix_, dims_);
}

PVector::PVector(std::vector<double> values) : p_(std::move(values)) {
    if (p_.empty()) throw LengthMismatch("PVector: empty");
    for (double v : p_) {
        if (!(v > 0.0) || v > 1.0) {
            throw DomainError("PVector: entry " + std::to_string(v) + " outside (0, 1]");
        }
    }
}

PVector two_qubit_lhat() { return PVector({1.0 / 3.0, 1.0 / std::sqrt(2.0), 1.0}); }

PVector vidal_tarrach(int d) {
    if (d < 2) throw DomainError("vidal_tarrach: d must be >= 2");
    std::vector<double> p(static_cast<std::size_t>(d - 1), 2.0 / (2.0 + d));
    p.back() = 1.0;
    return PVector(std::move(p));
}

PropositionResult proposition_check(const Spectrum& lambda, const PVector& p) {
    const int d = lambda.size();
    if (p.size() != d - 1) {
        throw LengthMismatch("proposition_check: p has " + std::to_string(p.size()) +
                             " entries, expected " + std::to_string(d - 1));
    }
    double sum = 0.0;
    for (int j = 1; j <= d - 1; ++j) {
        sum += j * (lambda[j - 1] - lambda[j]) / p.values()[static_cast<std::size_t>(j - 1)];
    }
    return PropositionResult{sum, sum <= 1.0 + kBoundaryTol};
}

PropositionResult proposition_check(const DensityMatrix& rho, const PVector& p) {
    return proposition_check(rho.spectrum(), p);
}

EquivalenceWitness theorem1_from_proposition(const Spectrum& lambda) {
    if (lambda.size() != 4) {
        throw WrongDimension("theorem1_from_proposition: needs a length-4 spectrum");
    }
    EquivalenceWitness w;
    w.proposition_sum = proposition_check(lambda, two_qubit_lhat()).sum;
    w.region_margin = region_margin(Region::A, lambda, 4);
    const bool sum_in = w.proposition_sum <= 1.0 + kBoundaryTol;
    const bool margin_in = w.region_margin <= kBoundaryTol;
    w.agree = sum_in == margin_in;
    return w;
}

EquivalenceWitness theorem2_from_proposition(const Spectrum& lambda, int d) {
    if (d < 3) throw DomainError("theorem2_from_proposition: needs d >= 3");
    if (lambda.size() != d) {
        throw LengthMismatch("theorem2_from_proposition: spectrum length " +
                             std::to_string(lambda.size()) + " != d = " + std::to_string(d));
    }
    EquivalenceWitness w;
    w.proposition_sum = proposition_check(lambda, vidal_tarrach(d)).sum;
    w.region_margin = region_margin(Region::Theorem2, lambda, d);
    const bool sum_in = w.proposition_sum <= 1.0 + kBoundaryTol;
    const bool margin_in = w.region_margin <= kBoundaryTol;
    w.agree = sum_in == margin_in;
    return w;
}

}  // namespace qsep
