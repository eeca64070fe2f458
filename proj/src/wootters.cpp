#include "qsep/wootters.hpp"

#include <algorithm>
#include <cmath>

namespace qsep {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* op) {
    if (!(rho.dims() == Dims{2, 2})) {
        throw WrongDimension(std::string(op) + ": needs dims (2,2)");
    }
}

/// sqrt(rho) * S * conj(rho) * S * sqrt(rho), re-symmetrized; Hermitian PSD
/// with the same spectrum as the squared Wootters operator.
CMat wootters_squared(const DensityMatrix& rho) {
    const CMat root = sqrt_psd(rho.matrix());
    const CMat s = spin_flip();
    CMat w2 = root * s * rho.matrix().conjugate() * s * root;
    return 0.5 * (w2 + w2.adjoint());
}

void check_zeta_domain(double alpha, double xi, const char* op) {
    constexpr double slack = 1e-12;
    if (alpha < 0.25 - slack || alpha > 0.5 + slack) {
        throw DomainError(std::string(op) + ": alpha = " + std::to_string(alpha) +
                          " outside [1/4, 1/2]");
    }
    if (xi < -slack || xi > 1.0 + slack) {
        throw DomainError(std::string(op) + ": xi = " + std::to_string(xi) + " outside [0, 1]");
    }
}

}  // namespace

CMat wootters_operator(const DensityMatrix& rho) {
    require_two_qubits(rho, "wootters_operator");
    return sqrt_psd(wootters_squared(rho));
}

WoottersResult wootters_check(const DensityMatrix& rho) {
    require_two_qubits(rho, "wootters_check");
    const HermitianEig eig = eig_hermitian(wootters_squared(rho));
    WoottersResult out;
    for (int i = 0; i < 4; ++i) {
        out.w[static_cast<std::size_t>(i)] = std::sqrt(std::max(eig.values[i], 0.0));
    }
    std::sort(out.w.begin(), out.w.end(), std::greater<double>());
    out.concurrence = std::max(0.0, out.margin());
    out.separable = out.margin() <= kBoundaryTol;
    return out;
}

double segment_alpha(double t) { return (1.0 + t) / 4.0; }
double segment_beta(double t) { return (1.0 - t) / 4.0; }

ZetaPair zeta_pm(double alpha, double xi) {
    check_zeta_domain(alpha, xi, "zeta_pm");
    const double base = 0.5 * alpha * (1.0 - 2.0 * alpha) +
                        (xi / 8.0) * (4.0 * alpha - 1.0) * (4.0 * alpha - 1.0);
    const double arg = 2.0 * xi * alpha * (1.0 - 2.0 * alpha) +
                       xi * xi * (2.0 * alpha - 0.5) * (2.0 * alpha - 0.5);
    const double swing = 0.25 * (4.0 * alpha - 1.0) * std::sqrt(std::max(arg, 0.0));
    return ZetaPair{base + swing, base - swing};
}

CMat w2_matrix(double alpha, double xi, const Eigen::Vector2cd& eta) {
    check_zeta_domain(alpha, xi, "w2_matrix");
    if (xi >= 1.0) throw DomainError("w2_matrix: xi must be < 1 (eta would vanish)");
    if (std::abs(eta.squaredNorm() - (1.0 - xi)) > 1e-9) {
        throw DomainError("w2_matrix: ||eta||^2 must equal 1 - xi");
    }
    const double beta = 0.5 - alpha;
    const double coupling = (alpha - beta) * std::sqrt(xi * alpha * beta);

    CMat m = CMat::Zero(4, 4);
    m(0, 0) = alpha * alpha;
    m(1, 1) = alpha * beta + alpha * (alpha - beta) * xi;
    m.block<1, 2>(1, 2) = coupling * eta.adjoint();
    m.block<2, 1>(2, 1) = coupling * eta;
    m.block<2, 2>(2, 2) =
        beta * beta * CMat::Identity(2, 2) + beta * (alpha - beta) * (eta * eta.adjoint());
    return m;
}

ThresholdForms threshold_forms(double alpha, double xi) {
    const ZetaPair z = zeta_pm(alpha, xi);
    ThresholdForms f;
    f.raw_margin = alpha - (0.5 - alpha) - std::sqrt(std::max(z.plus, 0.0)) -
                   std::sqrt(std::max(z.minus, 0.0));
    f.simplified_margin = alpha - 0.25 * (1.0 + 1.0 / std::sqrt(2.0 - xi));
    return f;
}

bool separability_threshold(double alpha, double xi) {
    return threshold_forms(alpha, xi).simplified_margin <= kBoundaryTol;
}

std::string to_string(OverlapCase c) {
    switch (c) {
        case OverlapCase::Disjoint: return "disjoint";
        case OverlapCase::Equal: return "equal";
        case OverlapCase::Generic: return "generic";
    }
    return "generic";
}

Rank2Analysis rank2_closed_form(const DensityMatrix& rho) {
    require_two_qubits(rho, "rank2_closed_form");
    const Spectrum& lambda = rho.spectrum();
    const double dev = std::max({std::abs(lambda[0] - 0.5), std::abs(lambda[1] - 0.5),
                                 std::abs(lambda[2]), std::abs(lambda[3])});
    if (dev > 1e-8) {
        throw SpectrumMismatch("rank2_closed_form: spectrum deviates from (1/2,1/2,0,0) by " +
                               std::to_string(dev));
    }
    if (lambda[1] - lambda[2] < 1e-6) {
        throw SpectrumMismatch("rank2_closed_form: top-2 eigenvalue cluster is not separated");
    }

    const HermitianEig& eig = rho.eig();
    Rank2Analysis out;
    out.P = eig.vectors.leftCols(2) * eig.vectors.leftCols(2).adjoint();
    out.P = 0.5 * (out.P + out.P.adjoint());
    const CMat s = spin_flip();
    out.Q = s * out.P.conjugate() * s;
    out.Q = 0.5 * (out.Q + out.Q.adjoint());

    out.overlap = (out.P * out.Q).trace().real();
    if (out.overlap < -kBoundaryTol || out.overlap > 2.0 + kBoundaryTol) {
        throw DomainError("rank2_closed_form: tr(PQ) = " + std::to_string(out.overlap) +
                          " outside [0, 2]");
    }
    out.xi = out.overlap - 1.0;

    if (out.overlap <= kBoundaryTol) {
        out.overlap_case = OverlapCase::Disjoint;
        out.ell_closed = 1.0;
    } else {
        out.overlap_case =
            out.overlap >= 2.0 - kBoundaryTol ? OverlapCase::Equal : OverlapCase::Generic;
        out.ell_closed = 1.0 / std::sqrt(3.0 - out.overlap);
        // tr(PQ) in (0, 1) cannot occur for exact rank-2 projections; anything
        // there means the Disjoint/Generic dichotomy is numerically fragile.
        out.near_disjoint = out.overlap < 1.0 - kBoundaryTol;
    }
    return out;
}

}  // namespace qsep
