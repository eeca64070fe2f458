#pragma once

#include <array>
#include <string>

#include "qsep/state.hpp"

namespace qsep {

/// Eigenvalues w1 >= w2 >= w3 >= w4 >= 0 of the Wootters operator
/// W = (sqrt(rho) * S * conj(rho) * S * sqrt(rho))^{1/2}, S = sigma_y (x) sigma_y,
/// conjugation taken entrywise in the computational product basis.
/// A two-qubit state is separable iff w1 <= w2 + w3 + w4 (exact criterion).
struct WoottersResult {
    std::array<double, 4> w{};
    double concurrence = 0.0;  // max(0, w1 - w2 - w3 - w4)
    bool separable = false;

    double margin() const { return w[0] - w[1] - w[2] - w[3]; }
};

/// The operator itself (Hermitian PSD 4x4). Throws WrongDimension unless
/// dims = (2,2).
CMat wootters_operator(const DensityMatrix& rho);

/// Criterion verdict via the spectrum of W^2 (one matrix square root fewer
/// than materializing W). Exact for two qubits.
WoottersResult wootters_check(const DensityMatrix& rho);

/// alpha = (1+t)/4 and beta = (1-t)/4, the double eigenvalues of
/// t*rho + (1-t)*tau for a rank-2 spec-(1/2,1/2,0,0) state.
double segment_alpha(double t);
double segment_beta(double t);

struct ZetaPair {
    double plus = 0.0;
    double minus = 0.0;
};

/// The two non-obvious eigenvalues of W^2 along the segment, as a function of
/// alpha in [1/4, 1/2] and the overlap parameter xi = tr(PQ) - 1:
///   zeta_pm = (a/2)(1-2a) + (xi/8)(4a-1)^2 +- ((4a-1)/4) sqrt(2 xi a (1-2a) + xi^2 (2a-1/2)^2).
/// xi is accepted on the closed interval [0, 1]; the formula is continuous
/// there and zeta_plus(a, 1) = a^2.
ZetaPair zeta_pm(double alpha, double xi);

/// The 4x4 block matrix for W^2 on C + C + C^2; eta must satisfy
/// ||eta||^2 = 1 - xi. Its spectrum is {alpha^2, beta^2, zeta_plus, zeta_minus}.
CMat w2_matrix(double alpha, double xi, const Eigen::Vector2cd& eta);

struct ThresholdForms {
    double raw_margin = 0.0;         // alpha - beta - sqrt(zeta+) - sqrt(zeta-)
    double simplified_margin = 0.0;  // alpha - (1 + 1/sqrt(2-xi))/4
};

ThresholdForms threshold_forms(double alpha, double xi);

/// Separability of the segment state at (alpha, xi): evaluates the criterion
/// alpha <= beta + sqrt(zeta+) + sqrt(zeta-) via its closed equivalent
/// alpha <= (1 + 1/sqrt(2-xi))/4.
bool separability_threshold(double alpha, double xi);

enum class OverlapCase { Disjoint, Equal, Generic };

std::string to_string(OverlapCase c);

/// Closed-form modulus of separability for a rank-2 state with spectrum
/// (1/2, 1/2, 0, 0): ell = 1 when Q = 1 - P, otherwise 1/sqrt(3 - tr(PQ)).
/// P is the rank-2 spectral projection of eigenvalue 1/2 and
/// Q = S * conj(P) * S.
///
/// The formula's derivation covers (P, Q) pairs that are disjoint, equal, or
/// share exactly one eigenvector (then tr(PQ) in [1, 2)); states from
/// sampling::rank2_configuration stay in that class and the formula matches
/// bisection there. Rank-2 states outside it exist (e.g. mixtures of two
/// product vectors with tr(PQ) < 1, which are separable with ell = 1); the
/// near_disjoint flag marks the visible part of that gap. Case bands are
/// tight (1e-9): ell is continuous at the Equal end (1/sqrt(3-2) = 1) but
/// NOT at the Disjoint end, where the formula limit would be 1/sqrt(3) and
/// the case value is 1.
struct Rank2Analysis {
    CMat P;
    CMat Q;
    double overlap = 0.0;  // tr(PQ)
    double xi = 0.0;       // tr(PQ) - 1
    OverlapCase overlap_case = OverlapCase::Generic;
    double ell_closed = 0.0;
    bool near_disjoint = false;
};

/// Throws SpectrumMismatch unless spec(rho) is within 1e-8 of (1/2,1/2,0,0)
/// and the top-2 eigenvalue cluster is separated (l2 - l3 >= 1e-6).
Rank2Analysis rank2_closed_form(const DensityMatrix& rho);

}  // namespace qsep
