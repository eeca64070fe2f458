#include <doctest.h>

#include <cmath>

#include "qsep/io.hpp"
#include "qsep/sampling.hpp"
#include "qsep/state.hpp"

using namespace qsep;

namespace {

CMat bell_matrix() {
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return m;
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("make_density validates and exposes the spectrum") {
    const DensityMatrix tau = make_density(CMat::Identity(4, 4) / 4.0, Dims{2, 2});
    for (int i = 0; i < 4; ++i) CHECK(tau.spectrum()[i] == doctest::Approx(0.25).epsilon(1e-14));

    const DensityMatrix bell = make_density(bell_matrix(), Dims{2, 2});
    CHECK(bell.spectrum()[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(bell.spectrum()[1]) <= 1e-12);
}

TEST_CASE("make_density error paths") {
    CMat not_psd = CMat::Zero(4, 4);
    not_psd(0, 0) = 0.6;
    not_psd(1, 1) = 0.5;
    not_psd(3, 3) = -0.1;
    CHECK_THROWS_AS(make_density(not_psd, Dims{2, 2}), NotPSD);

    CMat not_herm = CMat::Identity(4, 4) / 4.0;
    not_herm(0, 1) = Complex(0.2, 0.0);
    CHECK_THROWS_AS(make_density(not_herm, Dims{2, 2}), NotHermitian);

    CHECK_THROWS_AS(make_density(1.1 * CMat::Identity(4, 4) / 4.0, Dims{2, 2}), NotUnitTrace);
    CHECK_THROWS_AS(make_density(CMat::Identity(4, 4) / 4.0, Dims{2, 3}), DimensionMismatch);
    CHECK_THROWS_AS(make_density(CMat::Identity(3, 4) / 3.0, Dims{2, 2}), NonSquare);
}

TEST_CASE("make_density renormalizes small trace drift and clamps tiny negatives") {
    const double drift = 1.0 + 5e-7;
    const DensityMatrix rho = make_density(drift * CMat::Identity(4, 4) / 4.0, Dims{2, 2});
    CHECK(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-12);

    CMat eps = CMat::Identity(4, 4);
    eps(0, 0) = 0.5;
    eps(1, 1) = 0.5 + 5e-9;
    eps(2, 2) = 5e-9;
    eps(3, 3) = -5e-9;  // inside the accept-and-clamp band
    const DensityMatrix clamped = make_density(eps / eps.trace().real(), Dims{2, 2});
    CHECK(clamped.spectrum().min() >= 0.0);
    CHECK(clamped.eig().values[3] >= -1e-15);
}

TEST_CASE("spectrum_of is unitary invariant") {
    SampleRng rng(201);
    const Spectrum target({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6});
    const DensityMatrix rho = state_with_spectrum(target, Dims{2, 2}, rng);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(spectrum_of(rho)[i] - target[i]) <= 1e-12);

    for (int n = 0; n < 50; ++n) {
        const DensityMatrix sigma = random_state(Dims{2, 2}, rng);
        const CMat u = haar_unitary(4, rng);
        const DensityMatrix rotated =
            make_density(u * sigma.matrix() * u.adjoint(), Dims{2, 2});
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(spectrum_of(rotated)[i] - spectrum_of(sigma)[i]) <= 1e-10);
        }
    }
}

TEST_CASE("maximally_mixed") {
    CHECK((maximally_mixed(Dims{2, 2}).matrix() - CMat::Identity(4, 4) / 4.0).norm() == 0.0);
    CHECK((maximally_mixed(Dims{2, 3}).matrix() - CMat::Identity(6, 6) / 6.0).norm() == 0.0);
    CHECK(maximally_mixed(Dims{1, 1}).matrix()(0, 0).real() == 1.0);
}

TEST_CASE("purity") {
    const double s2 = std::sqrt(2.0);
    const Spectrum comparison({(2 + s2) / 8, (2 + s2) / 8, (2 - s2) / 8, (2 - s2) / 8});
    CHECK(comparison.purity() == doctest::Approx(3.0 / 8).epsilon(1e-14));

    CHECK(purity(maximally_mixed(Dims{2, 2})) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(purity(make_density(bell_matrix(), Dims{2, 2})) == doctest::Approx(1.0).epsilon(1e-10));

    SampleRng rng(202);
    for (int n = 0; n < 100; ++n) {
        const DensityMatrix rho = random_state(Dims{2, 3}, rng);
        const double via_matrix = (rho.matrix() * rho.matrix()).trace().real();
        CHECK(std::abs(purity(rho) - via_matrix) <= 1e-10);
    }
}

TEST_CASE("Spectrum constructor sorts, clamps and validates") {
    const Spectrum s({0.1, 0.4, 0.3, 0.2});
    CHECK(s[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(s[3] == doctest::Approx(0.1).epsilon(1e-14));

    const Spectrum clamped({1.0, 8e-10, -8e-10, 0.0});
    CHECK(clamped.min() == 0.0);
    CHECK(std::abs(clamped[0] - 1.0) <= 1e-8);

    CHECK_THROWS_AS(Spectrum({0.9, 0.2, 0.0, -0.1}), NotPSD);
    CHECK_THROWS_AS(Spectrum({0.5, 0.5, 0.1, 0.0}), NotUnitTrace);
    CHECK_THROWS_AS(Spectrum(std::vector<double>{}), LengthMismatch);
}

TEST_CASE("spectrum CSV parsing hits the vertex within 1e-9") {
    const Spectrum s = parse_spectrum("0.5,0.166666667,0.166666667,0.166666667");
    CHECK(std::abs(s[0] - 0.5) <= 1e-9);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(s[i] - 1.0 / 6) <= 1e-9);

    CHECK_THROWS_AS(parse_spectrum("0.5,abc,0.2,0.1"), MalformedInput);
    CHECK_THROWS_AS(parse_spectrum("0.5,0.5,"), MalformedInput);
    CHECK_THROWS_AS(parse_spectrum("0.9,0.3,0.0,0.0"), ValidationFailure);
}

TEST_CASE("state JSON round trip") {
    SampleRng rng(203);
    for (Dims dims : {Dims{2, 2}, Dims{2, 3}}) {
        const DensityMatrix rho = random_state(dims, rng);
        const DensityMatrix back = parse_state(write_state(rho));
        CHECK(back.dims() == dims);
        CHECK((back.matrix() - rho.matrix()).norm() <= 1e-12);
    }

    const DensityMatrix tau = parse_state(
        R"({"dims":[2,2],"matrix":[[[0.25,0],[0,0],[0,0],[0,0]],[[0,0],[0.25,0],[0,0],[0,0]],
            [[0,0],[0,0],[0.25,0],[0,0]],[[0,0],[0,0],[0,0],[0.25,0]]]})");
    CHECK((tau.matrix() - maximally_mixed(Dims{2, 2}).matrix()).norm() == 0.0);
}

TEST_CASE("spectrum CSV round trip") {
    SampleRng rng(204);
    for (int n = 0; n < 50; ++n) {
        const Spectrum s = spectrum_uniform(6, rng);
        const Spectrum back = parse_spectrum(write_spectrum(s));
        for (int i = 0; i < 6; ++i) CHECK(std::abs(back[i] - s[i]) <= 1e-12);
    }
}

TEST_CASE("state JSON error paths") {
    CHECK_THROWS_AS(parse_state("{\"dims\":[2,2],\"matrix\":[[[0.5"), MalformedInput);
    CHECK_THROWS_AS(parse_state("{\"matrix\":[]}"), MalformedInput);
    CHECK_THROWS_AS(parse_state("{\"dims\":[2,2],\"matrix\":[1,2,3,4]}"), MalformedInput);
    // parses but fails validation: trace 2
    CHECK_THROWS_AS(parse_state(
                        R"({"dims":[1,2],"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})"),
                    ValidationFailure);
}

TEST_CASE("report serialization carries verdicts and margins") {
    const CriteriaReport report = evaluate_all(maximally_mixed(Dims{2, 2}));
    const std::string text = write_report(report);
    const auto j = OrderedJson::parse(text);
    CHECK(j["dims"] == OrderedJson::array({2, 2}));
    CHECK(j["criteria"].size() == 5);
    CHECK(j["criteria"][0]["name"] == "theorem1");
    CHECK(j["criteria"][0]["verdict"] == "in");
    CHECK(j["criteria"][0]["margin"].get<double>() == doctest::Approx(-0.5));
}

}  // TEST_SUITE
