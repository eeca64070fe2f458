#include "qsep/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qsep {

namespace {

// Headroom of a few ulps so decimal inputs sitting exactly on the gate
// (e.g. a CSV summing to 1 + 1e-9) are not rejected by rounding.
constexpr double kUlpSlack = 8 * std::numeric_limits<double>::epsilon();

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw LengthMismatch("Spectrum: empty value list");
    std::sort(values_.begin(), values_.end(), std::greater<double>());
    for (double& v : values_) {
        if (v < 0.0) {
            if (v < -kStateNegEigTol) {
                throw NotPSD("Spectrum: entry " + std::to_string(v) + " below -1e-8");
            }
            v = 0.0;
        }
    }
    const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSpectrumSumTol + kUlpSlack) {
        throw NotUnitTrace("Spectrum: entries sum to " + std::to_string(sum));
    }
    for (double& v : values_) v /= sum;
}

Spectrum Spectrum::uniform(int d) {
    if (d < 1) throw LengthMismatch("Spectrum::uniform: d must be >= 1");
    return Spectrum(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d));
}

double Spectrum::purity() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return s;
}

DensityMatrix::DensityMatrix(CMat m, Dims d, HermitianEig e, Spectrum s)
    : matrix_(std::move(m)), dims_(d), eig_(std::move(e)), spectrum_(std::move(s)) {}

DensityMatrix make_density(const CMat& matrix, Dims dims) {
    if (dims.a < 1 || dims.b < 1) {
        throw DimensionMismatch("make_density: dims must be >= 1");
    }
    const int d = dims.total();
    if (matrix.rows() != matrix.cols()) {
        throw NonSquare("make_density: matrix is " + std::to_string(matrix.rows()) + "x" +
                        std::to_string(matrix.cols()));
    }
    if (matrix.rows() != d) {
        throw DimensionMismatch("make_density: matrix size " + std::to_string(matrix.rows()) +
                                " does not match dims " + std::to_string(dims.a) + "x" +
                                std::to_string(dims.b));
    }
    if (!is_hermitian(matrix, kHermTol)) {
        throw NotHermitian("make_density: matrix is not Hermitian within tolerance");
    }
    CMat sym = 0.5 * (matrix + matrix.adjoint());
    const double tr = sym.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw NotUnitTrace("make_density: trace " + std::to_string(tr) + " deviates by more than 1e-6");
    }
    sym /= tr;

    HermitianEig eig = eig_hermitian(sym);
    const double min_eig = eig.values[eig.values.size() - 1];
    if (min_eig < -kStateNegEigTol) {
        throw NotPSD("make_density: eigenvalue " + std::to_string(min_eig) + " below -1e-8");
    }
    if (min_eig < 0.0) {
        // Rebuild from the clamped spectrum so the stored operator is PSD
        // and downstream square roots stay real.
        RVec clamped = eig.values.cwiseMax(0.0);
        clamped /= clamped.sum();
        sym = eig.vectors * clamped.asDiagonal() * eig.vectors.adjoint();
        sym = 0.5 * (sym + sym.adjoint());
        eig = eig_hermitian(sym);
    }

    std::vector<double> vals(eig.values.data(), eig.values.data() + eig.values.size());
    return DensityMatrix(std::move(sym), dims, std::move(eig), Spectrum(std::move(vals)));
}

DensityMatrix maximally_mixed(Dims dims) {
    const int d = dims.total();
    if (d < 1) throw DimensionMismatch("maximally_mixed: dims must be >= 1");
    return make_density(CMat::Identity(d, d) / static_cast<double>(d), dims);
}

Spectrum spectrum_of(const DensityMatrix& rho) { return rho.spectrum(); }

double purity(const DensityMatrix& rho) { return rho.purity(); }

}  // namespace qsep
