#include "qsep/robustness.hpp"

#include <cmath>

#include "qsep/criteria.hpp"
#include "qsep/gap.hpp"
#include "qsep/wootters.hpp"

namespace qsep {

std::string to_string(Oracle o) { return o == Oracle::Ppt ? "ppt" : "wootters"; }

std::string to_string(ModulusMethod m) {
    switch (m) {
        case ModulusMethod::Bisection: return "bisection";
        case ModulusMethod::ClosedForm: return "closed_form";
        case ModulusMethod::BoundOnly: return "bound_only";
    }
    return "bisection";
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
    const CMat pt = partial_transpose(rho.matrix(), rho.dims(), Subsystem::B);
    const HermitianEig eig = eig_hermitian(pt);
    return eig.values[eig.values.size() - 1];
}

bool is_ppt(const DensityMatrix& rho, double tol) { return ppt_min_eigenvalue(rho) >= -tol; }

bool oracle_separable(const DensityMatrix& rho, Oracle oracle) {
    if (!(rho.dims() == Dims{2, 2})) {
        throw OracleUnavailable("oracle_separable: exact oracles exist only for dims (2,2)");
    }
    return oracle == Oracle::Ppt ? is_ppt(rho) : wootters_check(rho).separable;
}

DensityMatrix segment_state(const DensityMatrix& rho, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("segment_state: t = " + std::to_string(t) + " outside [0, 1]");
    }
    const int d = rho.dim();
    CMat m = t * rho.matrix() + (1.0 - t) / d * CMat::Identity(d, d);
    return make_density(m, rho.dims());
}

ModulusResult modulus_bisect(const DensityMatrix& rho, Oracle oracle, double tol) {
    if (!(rho.dims() == Dims{2, 2})) {
        throw OracleUnavailable("modulus_bisect: exact oracles exist only for dims (2,2)");
    }
    if (!(tol > 0.0)) throw DomainError("modulus_bisect: tol must be positive");

    ModulusResult out;
    out.method = ModulusMethod::Bisection;
    out.oracle = oracle;

    const int d = rho.dim();
    const CMat tau = CMat::Identity(d, d) / d;
    if ((rho.matrix() - tau).norm() <= 1e-12) {
        out.ell = 1.0;  // the segment is the single point tau
        return out;
    }
    if (oracle_separable(rho, oracle)) {
        out.ell = 1.0;  // whole segment separable by convexity
        return out;
    }

    // The floor guarantees the prefix [0, 2/(2+d)] is separable.
    double lo = vidal_tarrach_floor(d);
    double hi = 1.0;
    constexpr int kMaxIterations = 60;
    while (hi - lo > tol && out.iterations < kMaxIterations) {
        const double mid = 0.5 * (lo + hi);
        if (oracle_separable(segment_state(rho, mid), oracle)) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++out.iterations;
    }
    out.bracket_width = hi - lo;
    out.ell = 0.5 * (lo + hi);
    return out;
}

double vidal_tarrach_floor(int d) {
    if (d < 2) throw DomainError("vidal_tarrach_floor: d must be >= 2");
    return 2.0 / (2.0 + d);
}

LhatConstants lhat_constants() { return {1.0 / 3.0, 1.0 / std::sqrt(2.0), 1.0}; }

bool criterion2_check(const DensityMatrix& rho, Oracle oracle, double tol) {
    if (!(rho.dims() == Dims{2, 2})) {
        throw OracleUnavailable("criterion2_check: exact oracles exist only for dims (2,2)");
    }
    const GapRepresentation rep = gap_decompose(rho);
    const DensityMatrix omega = rep.omega();  // throws DegenerateTau for tau
    const double ell_omega = modulus_bisect(omega, oracle, tol).ell;
    return 1.0 - rep.residual_weight() <= ell_omega + kBoundaryTol;
}

ModulusResult modulus_report(const DensityMatrix& rho, Oracle oracle, double tol) {
    if (rho.dims() == Dims{2, 2}) return modulus_bisect(rho, oracle, tol);

    ModulusResult out;
    out.method = ModulusMethod::BoundOnly;
    out.oracle = oracle;
    const int d = rho.dim();
    double bound = vidal_tarrach_floor(d);

    // Separability certified by any spectral criterion forces ell = 1.
    bool certified = false;
    for (const RegionVerdict& rv : evaluate_all(rho).criteria) {
        certified = certified || rv.verdict == Verdict::In || rv.verdict == Verdict::Boundary;
    }
    if (certified) {
        out.ell = 1.0;
        return out;
    }

    // Convexity of 1/ell over the gap representation, with the universal
    // p-vector and ell(tau) = 1:  ell >= 1 / (sum_j mu_j/p_j + d*l_d).
    const double sum = proposition_check(rho.spectrum(), vidal_tarrach(d)).sum;
    bound = std::max(bound, 1.0 / (sum + d * rho.spectrum().min()));

    out.ell = bound;
    return out;
}

}  // namespace qsep
