#pragma once

#include <vector>

#include "qsep/state.hpp"

namespace qsep {

/// Decomposition rho = sum_j mu_j * rho_hat_j + d*l_d * tau, with gaps
/// mu_j = j*(l_j - l_{j+1}) and flat-spectrum averaged states
/// rho_hat_j = P_j / j (P_j the projection onto the top-j eigenvalue
/// cluster). Inside a degenerate cluster the projection split is arbitrary,
/// but the corresponding gap vanishes, so the reconstruction is unaffected.
class GapRepresentation {
public:
    const std::vector<double>& gaps() const { return mu_; }
    const std::vector<DensityMatrix>& averaged_states() const { return rho_hat_; }
    double residual_weight() const { return residual_weight_; }  // d * l_d
    const Spectrum& source_spectrum() const { return lambda_; }
    Dims dims() const { return dims_; }

    /// Normalized gap mixture omega = sum_j mu_j / (1 - d*l_d) * rho_hat_j.
    /// Throws DegenerateTau when l_d >= 1/d - b_tol (the state is tau and the
    /// mixture is undefined).
    DensityMatrix omega() const;

    friend GapRepresentation gap_decompose(const DensityMatrix& rho);

private:
    GapRepresentation() = default;

    std::vector<double> mu_;
    std::vector<DensityMatrix> rho_hat_;
    double residual_weight_ = 0.0;
    Spectrum lambda_ = Spectrum::uniform(1);
    Dims dims_;
    CMat omega_matrix_;  // cached; valid when residual_weight_ < 1
};

GapRepresentation gap_decompose(const DensityMatrix& rho);

/// Lower bounds p_j in (0, 1] on the separability moduli of the averaged
/// states rho_hat_1 .. rho_hat_{d-1}.
struct PVector {
    explicit PVector(std::vector<double> values);
    const std::vector<double>& values() const { return p_; }
    int size() const { return static_cast<int>(p_.size()); }

private:
    std::vector<double> p_;
};

/// (1/3, 1/sqrt(2), 1) — the exact constants for d = 4.
PVector two_qubit_lhat();

/// (2/(2+d), ..., 2/(2+d), 1), length d-1 — the universal fallback.
PVector vidal_tarrach(int d);

struct PropositionResult {
    double sum = 0.0;  // sum_j mu_j / p_j
    bool separable_certified = false;
};

/// Sufficient separability test: certified iff sum_j mu_j / p_j <= 1 + b_tol.
PropositionResult proposition_check(const DensityMatrix& rho, const PVector& p);
PropositionResult proposition_check(const Spectrum& lambda, const PVector& p);

/// Side-by-side evaluation showing the proposition with p = (1/3, 1/sqrt2, 1)
/// and the region-A margin decide identically (sum - 1 = 2 * margin).
struct EquivalenceWitness {
    double proposition_sum = 0.0;
    double region_margin = 0.0;
    bool agree = false;
};

EquivalenceWitness theorem1_from_proposition(const Spectrum& lambda);

/// Same with the universal p-vector against the theorem-2 margin
/// (sum - 1 = (d/2) * margin). Requires d >= 3.
EquivalenceWitness theorem2_from_proposition(const Spectrum& lambda, int d);

}  // namespace qsep
