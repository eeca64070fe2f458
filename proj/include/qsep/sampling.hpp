#pragma once

#include <cstdint>
#include <optional>

#include "qsep/criteria.hpp"
#include "qsep/state.hpp"

namespace qsep {

/// Counter-derived generator: stream i is seeded from (seed, i) by a
/// splitmix64 mix, so batch results are independent of scheduling and
/// identical across any worker count. All draws are built from raw 64-bit
/// outputs; nothing implementation-defined enters the stream.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : SampleRng(seed, 0) {}
    SampleRng(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /// Uniform in (0, 1).
    double uniform();

    /// Standard normal (Box-Muller; pairs cached).
    double normal();

    /// Unit-rate exponential.
    double exponential();

private:
    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Haar-distributed d x d unitary via QR of a complex Ginibre matrix with the
/// R-diagonal phases normalized to positive reals.
CMat haar_unitary(int d, SampleRng& rng);

/// U diag(lambda) U^dagger with Haar U; spectrum_of(result) = lambda.
DensityMatrix state_with_spectrum(const Spectrum& lambda, Dims dims, SampleRng& rng);

/// Flat Dirichlet(1,...,1) draw on the simplex, sorted nonincreasing.
Spectrum spectrum_uniform(int d, SampleRng& rng);

inline constexpr int kRejectionCap = 1'000'000;

/// Rejection-samples flat spectra until region membership (margin <= b_tol).
/// Throws RejectionTimeout after max_draws, WrongDimension when an A/B/C
/// region is requested with d != 4.
Spectrum spectrum_in_region(Region region, int d, SampleRng& rng, int max_draws = kRejectionCap);

/// Random state: flat spectrum conjugated by a Haar unitary.
DensityMatrix random_state(Dims dims, SampleRng& rng);

/// Random rank-2 two-qubit configuration (x x* + y y*)/2 where x is fixed by
/// the spin-flip conjugation theta(x) = S conj(x) and y is a random unit
/// vector orthogonal to x. These are exactly the states whose projection pair
/// (P, Q) shares an eigenvector, the geometry behind rank2_closed_form:
/// tr(PQ) lands in [1, 2) and the closed form agrees with bisection.
/// (A Haar-conjugated rank-2 spectrum does NOT stay in this class.)
DensityMatrix rank2_configuration(SampleRng& rng);

/// Batch description for the CLI; each sample i uses SampleRng(seed, i).
struct SampleConfig {
    std::uint64_t seed = 0;
    int count = 1;
    Dims dims{2, 2};
    std::optional<std::vector<double>> spectrum;  // fixed spectrum, if set
    std::optional<Region> region;                 // rejection-sampled region, if set

    void validate() const;
};

}  // namespace qsep
