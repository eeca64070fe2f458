#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qsep/errors.hpp"

namespace qsep {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Shared numeric tolerances.
inline constexpr double kHermTol = 1e-9;       // Hermiticity gate, relative Frobenius
inline constexpr double kEigClampTol = 1e-10;  // eigenvalue clamp band in sqrt_psd
inline constexpr double kBoundaryTol = 1e-9;   // verdict band: |margin| <= tol -> boundary

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted nonincreasing,
/// columns of `vectors` paired with `values`.
struct HermitianEig {
    RVec values;
    CMat vectors;
};

enum class Subsystem { A, B };

struct Dims {
    int a = 1;
    int b = 1;
    int total() const { return a * b; }
    bool operator==(const Dims&) const = default;
};

double frobenius_norm(const CMat& m);

/// ||M - M^dagger||_F <= tol * ||M||_F.
bool is_hermitian(const CMat& m, double tol = kHermTol);

/// Throws NonSquare / NotHermitian; inputs within tolerance are symmetrized
/// as (M + M^dagger)/2 before decomposition.
HermitianEig eig_hermitian(const CMat& m, double herm_tol = kHermTol);

/// Hermitian PSD square root. Eigenvalues in [-neg_tol, 0) are clamped to 0;
/// anything below -neg_tol throws NotPSD.
CMat sqrt_psd(const CMat& m, double neg_tol = kEigClampTol);

CMat kron(const CMat& a, const CMat& b);

/// Transposition of the chosen tensor factor's indices. Exact entry
/// permutation: involutive, trace- and Hermiticity-preserving.
CMat partial_transpose(const CMat& m, Dims dims, Subsystem which);

/// Entrywise complex conjugate in the computational product basis.
CMat conj_entrywise(const CMat& m);

/// Pauli y.
CMat sigma_y();

/// sigma_y (x) sigma_y, the two-qubit spin flip.
CMat spin_flip();

}  // namespace qsep
