#pragma once

#include <string>

#include "qsep/state.hpp"

namespace qsep {

enum class Oracle { Ppt, Wootters };

std::string to_string(Oracle o);

/// Smallest eigenvalue of the partial transpose over subsystem B.
double ppt_min_eigenvalue(const DensityMatrix& rho);

bool is_ppt(const DensityMatrix& rho, double tol = kBoundaryTol);

/// Exact separability decision for two qubits. Throws OracleUnavailable
/// unless dims = (2,2).
bool oracle_separable(const DensityMatrix& rho, Oracle oracle);

/// rho_t = t * rho + (1-t) * tau. Throws DomainError for t outside [0,1].
DensityMatrix segment_state(const DensityMatrix& rho, double t);

enum class ModulusMethod { Bisection, ClosedForm, BoundOnly };

std::string to_string(ModulusMethod m);

struct ModulusResult {
    double ell = 0.0;  // exact for bisection/closed_form, a lower bound for bound_only
    ModulusMethod method = ModulusMethod::Bisection;
    Oracle oracle = Oracle::Ppt;
    int iterations = 0;
    double bracket_width = 0.0;

    double random_robustness() const { return 1.0 / ell - 1.0; }
};

/// Modulus of separability ell(rho) = sup{t : rho_t separable} by bisection
/// on [2/(2+d), 1]; separability along the segment is monotone in t, so the
/// bracket always contains the boundary. ell(tau) = 1 by convention.
/// Throws OracleUnavailable for dims != (2,2).
ModulusResult modulus_bisect(const DensityMatrix& rho, Oracle oracle = Oracle::Ppt,
                             double tol = 1e-8);

/// Universal floor 2/(2+d), attained at a pure state.
double vidal_tarrach_floor(int d);

/// Minimal separability moduli over states with spectra e^(1), e^(2), e^(3)
/// for two qubits: (1/3, 1/sqrt(2), 1).
struct LhatConstants {
    double l1;
    double l2;
    double l3;
};

LhatConstants lhat_constants();

/// Exact decision route through the gap mixture: rho is separable iff
/// (1 - d*l_d) <= ell(omega). Throws DegenerateTau when rho = tau and
/// OracleUnavailable away from two qubits.
bool criterion2_check(const DensityMatrix& rho, Oracle oracle = Oracle::Ppt, double tol = 1e-8);

/// ell when an exact oracle exists (bisection), otherwise the best available
/// lower bound: max of the universal floor, the gap/convexity chain bound
/// 1/(sum_j mu_j/p_j + d*l_d) with the universal p-vector, and 1 when a
/// spectral criterion already certifies rho separable.
ModulusResult modulus_report(const DensityMatrix& rho, Oracle oracle = Oracle::Ppt,
                             double tol = 1e-8);

}  // namespace qsep
