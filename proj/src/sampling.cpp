#include "qsep/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qsep {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream_index) {
    // Mix seed and stream index so neighbouring streams are decorrelated.
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream_index * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL);
    state_ = splitmix64(s);
}

std::uint64_t SampleRng::next_u64() { return splitmix64(state_); }

double SampleRng::uniform() {
    // 53 random bits into (0, 1); offset by half an ulp to exclude 0.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SampleRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
}

double SampleRng::exponential() { return -std::log(uniform()); }

CMat haar_unitary(int d, SampleRng& rng) {
    if (d < 1) throw DomainError("haar_unitary: d must be >= 1");
    CMat ginibre(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            ginibre(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);

    Eigen::HouseholderQR<CMat> qr(ginibre);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        q.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
    }
    return q;
}

DensityMatrix state_with_spectrum(const Spectrum& lambda, Dims dims, SampleRng& rng) {
    const int d = dims.total();
    if (lambda.size() != d) {
        throw LengthMismatch("state_with_spectrum: spectrum length " +
                             std::to_string(lambda.size()) + " != d = " + std::to_string(d));
    }
    const CMat u = haar_unitary(d, rng);
    RVec diag(d);
    for (int i = 0; i < d; ++i) diag[i] = lambda[i];
    CMat m = u * diag.asDiagonal() * u.adjoint();
    return make_density(m, dims);
}

Spectrum spectrum_uniform(int d, SampleRng& rng) {
    if (d < 1) throw DomainError("spectrum_uniform: d must be >= 1");
    std::vector<double> v(static_cast<std::size_t>(d));
    double sum = 0.0;
    for (double& x : v) {
        x = rng.exponential();
        sum += x;
    }
    for (double& x : v) x /= sum;
    return Spectrum(std::move(v));
}

Spectrum spectrum_in_region(Region region, int d, SampleRng& rng, int max_draws) {
    if ((region == Region::A || region == Region::B || region == Region::C) && d != 4) {
        throw WrongDimension("spectrum_in_region: region " + region_name(region) +
                             " needs d = 4");
    }
    for (int i = 0; i < max_draws; ++i) {
        Spectrum s = spectrum_uniform(d, rng);
        if (region_margin(region, s, d) <= kBoundaryTol) return s;
    }
    throw RejectionTimeout("spectrum_in_region: no " + region_name(region) + " sample in " +
                           std::to_string(max_draws) + " draws");
}

DensityMatrix random_state(Dims dims, SampleRng& rng) {
    return state_with_spectrum(spectrum_uniform(dims.total(), rng), dims, rng);
}

DensityMatrix rank2_configuration(SampleRng& rng) {
    // theta(x) = x means Re(x) in the +1 eigenspace of S = sigma_y (x) sigma_y
    // and Im(x) in the -1 eigenspace: span{e1-e4, e2+e3} and {e1+e4, e2-e3}.
    const double a1 = rng.normal(), a2 = rng.normal(), b1 = rng.normal(), b2 = rng.normal();
    Eigen::Vector4cd x;
    x << Complex(a1, b1), Complex(a2, b2), Complex(a2, -b2), Complex(-a1, b1);
    x /= x.norm();

    Eigen::Vector4cd y;
    for (int k = 0; k < 4; ++k) y[k] = Complex(rng.normal(), rng.normal());
    y -= x * (x.adjoint() * y)(0);
    const double n = y.norm();
    if (n < 1e-8) return rank2_configuration(rng);  // retry a degenerate draw
    y /= n;

    const CMat m = 0.5 * (x * x.adjoint() + y * y.adjoint());
    return make_density(m, Dims{2, 2});
}

void SampleConfig::validate() const {
    if (count < 1) throw DomainError("SampleConfig: count must be >= 1");
    if (dims.a < 1 || dims.b < 1) throw DimensionMismatch("SampleConfig: dims must be >= 1");
    if (spectrum && region) {
        throw DomainError("SampleConfig: fixed spectrum and region constraint are exclusive");
    }
    if (region && (*region == Region::A || *region == Region::B || *region == Region::C) &&
        dims.total() != 4) {
        throw WrongDimension("SampleConfig: region " + region_name(*region) + " needs d = 4");
    }
    if (spectrum && static_cast<int>(spectrum->size()) != dims.total()) {
        throw LengthMismatch("SampleConfig: spectrum length does not match dims");
    }
}

}  // namespace qsep
