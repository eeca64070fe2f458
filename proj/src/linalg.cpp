#include "qsep/linalg.hpp"

#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qsep {

double frobenius_norm(const CMat& m) { return m.norm(); }

bool is_hermitian(const CMat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).norm() <= tol * m.norm();
}

HermitianEig eig_hermitian(const CMat& m, double herm_tol) {
    if (m.rows() != m.cols()) {
        throw NonSquare("eig_hermitian: matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    if (!is_hermitian(m, herm_tol)) {
        throw NotHermitian("eig_hermitian: ||M - M^dagger|| exceeds tolerance");
    }
    const CMat sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NotHermitian("eig_hermitian: eigensolver failed to converge");
    }
    // Eigen sorts ascending; flip to nonincreasing.
    const auto n = m.rows();
    HermitianEig out;
    out.values = solver.eigenvalues().reverse();
    out.vectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    return out;
}

CMat sqrt_psd(const CMat& m, double neg_tol) {
    HermitianEig eig = eig_hermitian(m);
    RVec roots(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        double v = eig.values[i];
        if (v < -neg_tol) {
            throw NotPSD("sqrt_psd: eigenvalue " + std::to_string(v) + " below -" +
                         std::to_string(neg_tol));
        }
        roots[i] = v > 0.0 ? std::sqrt(v) : 0.0;
    }
    return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

CMat kron(const CMat& a, const CMat& b) { return Eigen::kroneckerProduct(a, b); }

CMat partial_transpose(const CMat& m, Dims dims, Subsystem which) {
    const int d = dims.total();
    if (m.rows() != m.cols() || m.rows() != d) {
        throw DimensionMismatch("partial_transpose: matrix size " + std::to_string(m.rows()) +
                                " does not match dims " + std::to_string(dims.a) + "x" +
                                std::to_string(dims.b));
    }
    CMat out(d, d);
    for (int ra = 0; ra < dims.a; ++ra)
        for (int rb = 0; rb < dims.b; ++rb)
            for (int ca = 0; ca < dims.a; ++ca)
                for (int cb = 0; cb < dims.b; ++cb) {
                    const int row = ra * dims.b + rb;
                    const int col = ca * dims.b + cb;
                    const int src_row = which == Subsystem::A ? ca * dims.b + rb : ra * dims.b + cb;
                    const int src_col = which == Subsystem::A ? ra * dims.b + cb : ca * dims.b + rb;
                    out(row, col) = m(src_row, src_col);
                }
    return out;
}

CMat conj_entrywise(const CMat& m) { return m.conjugate(); }

CMat sigma_y() {
    CMat y(2, 2);
    y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return y;
}

CMat spin_flip() {
    static const CMat s = kron(sigma_y(), sigma_y());
    return s;
}

}  // namespace qsep
