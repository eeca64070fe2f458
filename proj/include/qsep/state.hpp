#pragma once

#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

// Validation gates for file-parsed and float-noisy inputs.
inline constexpr double kTraceTol = 1e-6;        // renormalize only within this band
inline constexpr double kStateNegEigTol = 1e-8;  // accept-and-clamp band for state spectra
inline constexpr double kSpectrumSumTol = 1e-9;

/// Nonincreasing probability vector of repeated eigenvalues. Construction
/// sorts, clamps small negatives ([-1e-8, 0) -> 0) and renormalizes; larger
/// deviations are rejected.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values);

    static Spectrum uniform(int d);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }

    double purity() const;  // sum of squares
    double min() const { return values_.back(); }

private:
    std::vector<double> values_;
};

/// Unit-trace Hermitian PSD matrix with bipartite dimensions. Use
/// make_density to construct; the matrix is symmetrized, trace-renormalized
/// and spectrum-clamped on the way in, so the stored operator is safe to
/// feed to sqrt_psd without further cleanup.
class DensityMatrix {
public:
    const CMat& matrix() const { return matrix_; }
    Dims dims() const { return dims_; }
    int dim() const { return dims_.total(); }

    const HermitianEig& eig() const { return eig_; }
    const Spectrum& spectrum() const { return spectrum_; }
    double purity() const { return spectrum_.purity(); }

    friend DensityMatrix make_density(const CMat& matrix, Dims dims);

private:
    DensityMatrix(CMat m, Dims d, HermitianEig e, Spectrum s);

    CMat matrix_;
    Dims dims_;
    HermitianEig eig_;
    Spectrum spectrum_;
};

/// Validated constructor. Errors: DimensionMismatch, NotHermitian,
/// NotUnitTrace (|tr - 1| > 1e-6), NotPSD (eigenvalue < -1e-8).
DensityMatrix make_density(const CMat& matrix, Dims dims);

DensityMatrix maximally_mixed(Dims dims);

Spectrum spectrum_of(const DensityMatrix& rho);

/// tr(rho^2).
double purity(const DensityMatrix& rho);

}  // namespace qsep
