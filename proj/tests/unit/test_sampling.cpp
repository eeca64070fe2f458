#include <doctest.h>

#include <cmath>

#include "qsep/sampling.hpp"
#include "qsep/wootters.hpp"

using namespace qsep;

TEST_SUITE("sampling") {

TEST_CASE("SampleRng streams are deterministic and index-split") {
    SampleRng a(42, 7), b(42, 7), c(42, 8);
    bool identical = true, distinct = false;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t va = a.next_u64();
        identical = identical && va == b.next_u64();
        distinct = distinct || va != c.next_u64();
    }
    CHECK(identical);
    CHECK(distinct);

    SampleRng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("haar_unitary is unitary, including d = 1") {
    SampleRng rng(701);
    for (int d : {1, 2, 4, 6}) {
        const CMat u = haar_unitary(d, rng);
        CHECK((u.adjoint() * u - CMat::Identity(d, d)).norm() <= 1e-10);
    }
    const CMat scalar = haar_unitary(1, rng);
    CHECK(std::abs(std::abs(scalar(0, 0)) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(haar_unitary(0, rng), DomainError);
}

TEST_CASE("haar_unitary first-column statistics") {
    SampleRng rng(702);
    const int samples = 1000, d = 4;
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    Complex phase_mean = 0;
    for (int n = 0; n < samples; ++n) {
        const CMat u = haar_unitary(d, rng);
        for (int i = 0; i < d; ++i) mean[i] += std::norm(u(i, 0));
        phase_mean += u(0, 0) / std::abs(u(0, 0));
    }
    mean /= samples;
    phase_mean /= samples;
    // |u_i0|^2 ~ Beta(1, 3): mean 1/4, var 3/80; 3 sigma of the sample mean
    const double three_sigma = 3.0 * std::sqrt(3.0 / 80.0 / samples);
    for (int i = 0; i < d; ++i) CHECK(std::abs(mean[i] - 0.25) <= three_sigma);
    // phases uniform on the circle: complex mean near zero
    CHECK(std::abs(phase_mean) <= 3.0 / std::sqrt(static_cast<double>(samples)));
}

TEST_CASE("state_with_spectrum round trip") {
    SampleRng rng(703);
    for (int n = 0; n < 300; ++n) {
        const Spectrum lambda = spectrum_uniform(4, rng);
        const DensityMatrix rho = state_with_spectrum(lambda, Dims{2, 2}, rng);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(rho.spectrum()[i] - lambda[i]) <= 1e-10);
    }

    // uniform spectrum gives tau regardless of the unitary
    const DensityMatrix tau = state_with_spectrum(Spectrum::uniform(4), Dims{2, 2}, rng);
    CHECK((tau.matrix() - CMat::Identity(4, 4) / 4.0).norm() <= 1e-12);

    CHECK_THROWS_AS(state_with_spectrum(Spectrum::uniform(4), Dims{2, 3}, rng), LengthMismatch);
}

TEST_CASE("spectrum_uniform lands on the sorted simplex") {
    SampleRng rng(704);
    for (int n = 0; n < 200; ++n) {
        const Spectrum s = spectrum_uniform(6, rng);
        double sum = 0;
        for (int i = 0; i < 6; ++i) {
            sum += s[i];
            CHECK(s[i] >= 0.0);
            if (i) CHECK(s[i] <= s[i - 1]);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("spectrum_in_region post-condition and gates") {
    SampleRng rng(705);
    for (Region r : {Region::A, Region::B, Region::C, Region::Theorem2,
                     Region::GurvitsBarnum}) {
        for (int n = 0; n < 100; ++n) {
            CHECK(region_margin(r, spectrum_in_region(r, 4, rng), 4) <= kBoundaryTol);
        }
    }
    CHECK(region_margin(Region::Theorem2, spectrum_in_region(Region::Theorem2, 6, rng), 6) <=
          kBoundaryTol);

    CHECK_THROWS_AS(spectrum_in_region(Region::A, 6, rng), WrongDimension);
    CHECK_THROWS_AS(spectrum_in_region(Region::A, 4, rng, 0), RejectionTimeout);
}

TEST_CASE("region A has positive acceptance rate") {
    SampleRng rng(706);
    int hits = 0;
    for (int n = 0; n < 100000; ++n) {
        if (region_margin(Region::A, spectrum_uniform(4, rng), 4) <= kBoundaryTol) ++hits;
    }
    CHECK(hits > 0);
    MESSAGE("region A acceptance: ", hits, " / 100000");
}

TEST_CASE("spectral verdicts are invariant under extra fixed conjugation") {
    SampleRng rng(707);
    const CMat v = haar_unitary(4, rng);
    for (int n = 0; n < 100; ++n) {
        const DensityMatrix rho = random_state(Dims{2, 2}, rng);
        const DensityMatrix rotated = make_density(v * rho.matrix() * v.adjoint(), Dims{2, 2});
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(rho.spectrum()[i] - rotated.spectrum()[i]) <= 1e-10);
        }
        CHECK(std::abs(region_margin(Region::A, rho.spectrum(), 4) -
                       region_margin(Region::A, rotated.spectrum(), 4)) <= 1e-10);
    }
}

TEST_CASE("rank2_configuration stays in the shared-eigenvector class") {
    SampleRng rng(708);
    for (int n = 0; n < 200; ++n) {
        const DensityMatrix rho = rank2_configuration(rng);
        CHECK(std::abs(rho.spectrum()[0] - 0.5) <= 1e-9);
        CHECK(std::abs(rho.spectrum()[1] - 0.5) <= 1e-9);
        CHECK(rho.spectrum()[2] <= 1e-9);
        const Rank2Analysis an = rank2_closed_form(rho);
        CHECK(an.overlap >= 1.0 - 1e-9);
        CHECK(an.overlap <= 2.0 + 1e-9);
    }
}

TEST_CASE("SampleConfig validation") {
    SampleConfig config;
    config.count = 0;
    CHECK_THROWS_AS(config.validate(), DomainError);

    config = SampleConfig{};
    config.region = Region::A;
    config.dims = Dims{2, 3};
    CHECK_THROWS_AS(config.validate(), WrongDimension);

    config = SampleConfig{};
    config.spectrum = std::vector<double>{0.5, 0.5};
    CHECK_THROWS_AS(config.validate(), LengthMismatch);

    config = SampleConfig{};
    config.spectrum = std::vector<double>{0.5, 0.5, 0.0, 0.0};
    config.region = Region::B;
    CHECK_THROWS_AS(config.validate(), DomainError);
}

}  // TEST_SUITE
