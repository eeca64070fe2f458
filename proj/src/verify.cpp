#include "qsep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qsep/criteria.hpp"
#include "qsep/gap.hpp"
#include "qsep/robustness.hpp"
#include "qsep/sampling.hpp"
#include "qsep/state.hpp"
#include "qsep/wootters.hpp"

namespace qsep {

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::vector<Spectrum> region_a_vertices() {
    return {
        Spectrum({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}),
        Spectrum({(2 + kSqrt2) / 8, (2 + kSqrt2) / 8, (2 - kSqrt2) / 8, (2 - kSqrt2) / 8}),
        Spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0}),
        Spectrum({0.25, 0.25, 0.25, 0.25}),
    };
}

/// The spectrum shown to lie in B but not in A:
/// (sqrt2/3)*(3/4,1/4,0,0) + (1-sqrt2/3)*(1/4,1/4,1/4,1/4).
Spectrum b_not_a_mixture() {
    const double w = kSqrt2 / 3.0;
    std::vector<double> v(4);
    const double pure[4] = {0.75, 0.25, 0.0, 0.0};
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = w * pure[i] + (1 - w) * 0.25;
    return Spectrum(std::move(v));
}

/// Uniform draw on the two-qubit purity sphere sum(l^2) = 1/3 inside the
/// simplex: push a flat sample with purity >= 1/3 back toward the center
/// until it hits the sphere (the path stays inside the simplex).
Spectrum b_boundary_sample(SampleRng& rng) {
    for (;;) {
        const Spectrum s = spectrum_uniform(4, rng);
        const double p = s.purity();
        if (p < 1.0 / 3.0) continue;
        const double scale = std::sqrt((1.0 / 3.0 - 0.25) / (p - 0.25));
        std::vector<double> v(4);
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = 0.25 + scale * (s[i] - 0.25);
        return Spectrum(std::move(v));
    }
}

class Checker {
public:
    explicit Checker(std::uint64_t seed) : seed_(seed) {}

    SampleRng rng() { return SampleRng(seed_, next_stream_++); }

    void add(const std::string& name, bool pass, double residual, std::string note = {}) {
        checks_.push_back(CheckResult{name, pass, residual, std::move(note)});
    }

    /// pass iff |residual| <= tol.
    void add_residual(const std::string& name, double residual, double tol,
                      std::string note = {}) {
        add(name, std::abs(residual) <= tol, residual, std::move(note));
    }

    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    std::uint64_t seed_;
    std::uint64_t next_stream_ = 1;
    std::vector<CheckResult> checks_;
};

// ---------------------------------------------------------------------------
// vertices

std::vector<CheckResult> suite_vertices(std::uint64_t seed) {
    Checker ck(seed);

    {
        const auto vertices = region_a_vertices();
        // Three vertices sit on the criterion hyperplane, tau is interior.
        const double expected[4] = {0.0, 0.0, 0.0, -0.5};
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst,
                             std::abs(region_a(vertices[static_cast<std::size_t>(i)]).margin -
                                      expected[i]));
        }
        ck.add_residual("region_a_vertex_margins", worst, 1e-12);
    }
    {
        auto rng = ck.rng();
        const auto vertices = region_a_vertices();
        double worst = -1.0;
        for (int n = 0; n < 100; ++n) {
            double w[4], sum = 0.0;
            for (double& x : w) {
                x = rng.exponential();
                sum += x;
            }
            std::vector<double> combo(4, 0.0);
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 4; ++k)
                    combo[static_cast<std::size_t>(i)] +=
                        w[k] / sum * vertices[static_cast<std::size_t>(k)][i];
            worst = std::max(worst, region_a(Spectrum(combo)).margin);
        }
        ck.add("region_a_convex_combinations", worst <= 1e-12, worst,
               "max region_a margin over 100 vertex mixtures");
    }
    {
        const Spectrum s = region_a_vertices()[1];
        const double purity_dev = s.purity() - 3.0 / 8.0;
        const double a_dev = region_a(s).margin;
        const bool out_of_b = region_b(s).verdict == Verdict::Out;
        ck.add("vertex_in_a_not_in_b",
               std::abs(purity_dev) <= 1e-12 && std::abs(a_dev) <= 1e-12 && out_of_b,
               std::max(std::abs(purity_dev), std::abs(a_dev)),
               "purity 3/8 and region_a margin 0");
    }
    {
        const Spectrum s = b_not_a_mixture();
        const double purity_dev = s.purity() - 1.0 / 3.0;
        const double margin_dev = region_a(s).margin - (5.0 / 3.0 + kSqrt2 / 4.0 - 2.0);
        const bool out_of_a = region_a(s).margin > kBoundaryTol;
        ck.add("mixture_in_b_not_in_a",
               std::abs(purity_dev) <= 1e-12 && std::abs(margin_dev) <= 1e-12 && out_of_a,
               std::max(std::abs(purity_dev), std::abs(margin_dev)),
               "purity 1/3, region_a margin 5/3 + sqrt2/4 - 2");
    }
    {
        auto rng = ck.rng();
        double worst = 0.0;
        for (int n = 0; n < 100; ++n) {
            const std::vector<double> sorted = spectrum_uniform(4, rng).values();
            std::vector<double> shuffled = sorted;
            for (std::size_t i = shuffled.size(); i > 1; --i) {
                std::swap(shuffled[i - 1],
                          shuffled[static_cast<std::size_t>(rng.next_u64() % i)]);
            }
            const Spectrum s(sorted), t(shuffled);
            for (Region r : {Region::A, Region::B, Region::C, Region::Theorem2,
                             Region::GurvitsBarnum}) {
                worst = std::max(worst, std::abs(region_margin(r, s, 4) - region_margin(r, t, 4)));
            }
        }
        ck.add_residual("permutation_safety", worst, 0.0, "sorted construction, exact agreement");
    }
    return ck.take();
}

// ---------------------------------------------------------------------------
// containment

std::vector<CheckResult> suite_containment(std::uint64_t seed) {
    Checker ck(seed);

    {
        const double expected[4] = {0.0, 0.0, 0.0, -0.5};
        double worst = 0.0;
        const auto vertices = region_a_vertices();
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst,
                             std::abs(region_c(vertices[static_cast<std::size_t>(i)]).margin -
                                      expected[i]));
        }
        ck.add_residual("region_c_vertex_margins", worst, 1e-12);
    }
    {
        auto rng = ck.rng();
        double worst = -1.0;
        int hits = 0;
        for (int n = 0; n < 100000; ++n) {
            const Spectrum s = spectrum_uniform(4, rng);
            if (region_a(s).margin <= kBoundaryTol) {
                ++hits;
                worst = std::max(worst, region_c(s).margin);
            }
        }
        ck.add("a_subset_c_sweep", hits > 0 && worst <= kBoundaryTol, worst,
               std::to_string(hits) + " samples in A out of 100000");
    }
    {
        auto rng = ck.rng();
        double worst_identity = 0.0;
        double worst_margin = -1.0;
        for (int n = 0; n < 100000; ++n) {
            const Spectrum s = b_boundary_sample(rng);
            const double lhs = (s[0] - s[2]) * (s[0] - s[2]) - 4.0 * s[1] * s[3];
            const double rhs = -3.0 * (s[0] + s[2] - 2.0 / 3.0) * (s[0] + s[2] - 2.0 / 3.0);
            worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
            worst_margin = std::max(worst_margin, region_c(s).margin);
        }
        ck.add("b_boundary_identity", worst_identity <= 1e-9 && worst_margin <= kBoundaryTol,
               worst_identity, "(l1-l3)^2 - 4 l2 l4 = -3 (l1+l3-2/3)^2 on the purity sphere");
    }
    {
        auto rng = ck.rng();
        double worst_gap = -1.0;  // margin_a - margin_thm2, must stay <= 0
        bool implication = true;
        for (int n = 0; n < 100000; ++n) {
            const Spectrum s = spectrum_uniform(4, rng);
            const double ma = region_a(s).margin;
            const double m2 = region_margin(Region::Theorem2, s, 4);
            worst_gap = std::max(worst_gap, ma - m2);
            if (m2 <= kBoundaryTol && ma > kBoundaryTol) implication = false;
        }
        ck.add("theorem2_implies_theorem1", implication && worst_gap <= 1e-12, worst_gap,
               "pointwise margin dominance at d = 4");
    }
    {
        auto rng = ck.rng();
        double worst = 1.0;  // min partial-transpose eigenvalue observed
        for (Region r : {Region::A, Region::B, Region::C, Region::Theorem2,
                         Region::GurvitsBarnum}) {
            for (int n = 0; n < 10000; ++n) {
                const Spectrum s = spectrum_in_region(r, 4, rng);
                const DensityMatrix rho = state_with_spectrum(s, Dims{2, 2}, rng);
                worst = std::min(worst, ppt_min_eigenvalue(rho));
            }
        }
        ck.add("soundness_vs_ppt", worst >= -1e-9, worst,
               "min PT eigenvalue over 10000 states per region");
    }
    {
        const Spectrum e3({1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0});
        ck.add_residual("gurvits_barnum_boundary_e3", gurvits_barnum(e3, 4).margin, 1e-12);
    }
    return ck.take();
}

// ---------------------------------------------------------------------------
// gap

std::vector<CheckResult> suite_gap(std::uint64_t seed) {
    Checker ck(seed);

    {
        auto rng = ck.rng();
        double worst_recon = 0.0;
        double worst_spec = 0.0;
        double worst_tau = 0.0;
        double worst_gb = 0.0;
        for (Dims dims : {Dims{2, 2}, Dims{2, 3}}) {
            const int d = dims.total();
            const CMat tau = CMat::Identity(d, d) / d;
            for (int n = 0; n < 1000; ++n) {
                const DensityMatrix rho = random_state(dims, rng);
                const GapRepresentation rep = gap_decompose(rho);

                CMat sum = rep.residual_weight() * tau;
                for (int j = 0; j < d - 1; ++j) {
                    sum += rep.gaps()[static_cast<std::size_t>(j)] *
                           rep.averaged_states()[static_cast<std::size_t>(j)].matrix();
                }
                worst_recon = std::max(worst_recon, (sum - rho.matrix()).norm());

                for (int j = 1; j <= d - 1; ++j) {
                    const Spectrum sj =
                        rep.averaged_states()[static_cast<std::size_t>(j - 1)].spectrum();
                    for (int i = 0; i < d; ++i) {
                        const double expected = i < j ? 1.0 / j : 0.0;
                        worst_spec = std::max(worst_spec, std::abs(sj[i] - expected));
                    }
                }

                const CMat full = rho.eig().vectors * rho.eig().vectors.adjoint() / d;
                worst_tau = std::max(worst_tau, (full - tau).norm());

                worst_gb = std::max(
                    worst_gb,
                    std::abs(rep.averaged_states().back().purity() - 1.0 / (d - 1)));
            }
        }
        ck.add_residual("gap_reconstruction", worst_recon, 1e-12, "d = 4 and d = 6");
        ck.add_residual("rho_hat_spectra", worst_spec, 1e-10, "spec(rho_hat_j) = e^(j)");
        ck.add_residual("rho_hat_d_is_tau", worst_tau, 1e-12);
        ck.add_residual("rho_hat_top_purity", worst_gb, 1e-12, "purity(rho_hat_{d-1}) = 1/(d-1)");
    }
    {
        const DensityMatrix tau = maximally_mixed(Dims{2, 2});
        const GapRepresentation rep = gap_decompose(tau);
        double gap_mass = 0.0;
        for (double m : rep.gaps()) gap_mass += std::abs(m);
        bool degenerate_flagged = false;
        try {
            rep.omega();
        } catch (const DegenerateTau&) {
            degenerate_flagged = true;
        }
        ck.add("tau_gap_degenerate",
               gap_mass <= 1e-12 && std::abs(rep.residual_weight() - 1.0) <= 1e-12 &&
                   degenerate_flagged,
               gap_mass, "tau has zero gaps and no omega");
    }
    {
        auto rng = ck.rng();
        bool all_ppt = true;
        double worst = 1.0;
        const PVector p = two_qubit_lhat();
        int certified = 0;
        for (int n = 0; n < 10000; ++n) {
            const DensityMatrix rho = random_state(Dims{2, 2}, rng);
            if (proposition_check(rho, p).separable_certified) {
                ++certified;
                const double min_eig = ppt_min_eigenvalue(rho);
                worst = std::min(worst, min_eig);
                all_ppt = all_ppt && min_eig >= -1e-9;
            }
        }
        ck.add("proposition_certifies_ppt", all_ppt && certified > 0, worst,
               std::to_string(certified) + " of 10000 states certified");
    }
    {
        auto rng = ck.rng();
        double worst_linear = 0.0;
        bool signs = true;
        for (int n = 0; n < 10000; ++n) {
            const Spectrum s = spectrum_uniform(4, rng);
            const EquivalenceWitness w = theorem1_from_proposition(s);
            worst_linear =
                std::max(worst_linear, std::abs(w.proposition_sum - 1.0 - 2.0 * w.region_margin));
            signs = signs && w.agree;
        }
        ck.add("theorem1_from_proposition", signs && worst_linear <= 1e-12, worst_linear,
               "sum - 1 = 2 * margin");
    }
    {
        auto rng = ck.rng();
        double worst_linear = 0.0;
        bool signs = true;
        for (int d : {4, 6, 9}) {
            for (int n = 0; n < 10000; ++n) {
                const Spectrum s = spectrum_uniform(d, rng);
                const EquivalenceWitness w = theorem2_from_proposition(s, d);
                worst_linear = std::max(
                    worst_linear, std::abs(w.proposition_sum - 1.0 - 0.5 * d * w.region_margin));
                signs = signs && w.agree;
            }
        }
        ck.add("theorem2_from_proposition", signs && worst_linear <= 1e-12, worst_linear,
               "sum - 1 = (d/2) * margin at d = 4, 6, 9");
    }
    return ck.take();
}

// ---------------------------------------------------------------------------
// appendix

DensityMatrix lhat2_minimizer_state() {
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.25;  // |Phi+><Phi+| / 2
    m(1, 1) = 0.5;                                 // |01><01| / 2
    return make_density(m, Dims{2, 2});
}

std::vector<CheckResult> suite_appendix(std::uint64_t seed) {
    Checker ck(seed);
    const Spectrum rank2_spec({0.5, 0.5, 0.0, 0.0});

    {
        auto rng = ck.rng();
        double worst = 1.0;
        for (int n = 0; n < 10000; ++n) {
            const DensityMatrix rho = random_state(Dims{2, 2}, rng);
            const HermitianEig eig = eig_hermitian(wootters_operator(rho));
            worst = std::min(worst, eig.values[eig.values.size() - 1]);
        }
        ck.add("wootters_eigenvalue_clamp", worst >= -1e-10, worst,
               "min Wootters eigenvalue over 10000 states");
    }
    {
        auto rng = ck.rng();
        bool agree = true;
        int band = 0;
        for (int n = 0; n < 10000; ++n) {
            const DensityMatrix rho = random_state(Dims{2, 2}, rng);
            const WoottersResult w = wootters_check(rho);
            if (std::abs(w.margin()) < 1e-7) {
                ++band;
                continue;
            }
            agree = agree && w.separable == is_ppt(rho);
        }
        ck.add("wootters_ppt_concordance", agree, 0.0,
               std::to_string(band) + " samples inside the 1e-7 guard band");
    }
    {
        auto rng = ck.rng();
        double worst = 0.0;
        double worst_alpha = 0.0;
        for (int n = 0; n < 200; ++n) {
            const DensityMatrix rho = rank2_configuration(rng);
            const Rank2Analysis an = rank2_closed_form(rho);
            if (an.overlap_case == OverlapCase::Disjoint) continue;
            const double xi = std::clamp(an.xi, 0.0, 1.0);
            for (double t : {0.15, 0.4, 0.65, 0.9}) {
                const double alpha = segment_alpha(t);
                const double beta = segment_beta(t);
                const ZetaPair z = zeta_pm(alpha, xi);
                std::vector<double> expected = {alpha * alpha, beta * beta, z.plus, z.minus};
                std::sort(expected.begin(), expected.end(), std::greater<double>());

                const WoottersResult w = wootters_check(segment_state(rho, t));
                for (int i = 0; i < 4; ++i) {
                    const double w2 = w.w[static_cast<std::size_t>(i)] *
                                      w.w[static_cast<std::size_t>(i)];
                    worst = std::max(worst,
                                     std::abs(w2 - expected[static_cast<std::size_t>(i)]));
                }
                if (an.overlap_case == OverlapCase::Generic) {
                    worst_alpha = std::max(worst_alpha, std::abs(w.w[0] - alpha));
                }
            }
        }
        ck.add_residual("rank2_w2_spectrum_formula", worst, 1e-9,
                        "numeric spec(W^2) vs {a^2, b^2, zeta+-}");
        ck.add_residual("alpha_largest_eigenvalue", worst_alpha, 1e-9,
                        "largest Wootters eigenvalue equals alpha in the generic case");
    }
    {
        double worst_drop = 0.0;  // zeta+ must be nondecreasing in xi
        double worst_neg = 0.0;
        for (int ia = 0; ia <= 50; ++ia) {
            const double alpha = 0.25 + 0.25 * ia / 50.0;
            double prev = -1.0;
            for (int ix = 0; ix <= 100; ++ix) {
                const double xi = ix / 100.0;
                const ZetaPair z = zeta_pm(alpha, xi);
                worst_neg = std::min(worst_neg, std::min(z.plus, z.minus));
                if (prev > -1.0) worst_drop = std::max(worst_drop, prev - z.plus);
                prev = z.plus;
            }
        }
        ck.add("zeta_plus_increasing", worst_drop <= 1e-12 && worst_neg >= -1e-12,
               std::max(worst_drop, -worst_neg), "monotone in xi and nonnegative on the domain");
    }
    {
        double worst = 0.0;
        for (int ia = 0; ia < 50; ++ia) {
            const double alpha = 0.25 + 0.25 * ia / 49.0;
            worst = std::max(worst, std::abs(zeta_pm(alpha, 1.0).plus - alpha * alpha));
        }
        ck.add_residual("zeta_plus_at_xi_one", worst, 1e-12, "zeta+(a, 1) = a^2");
    }
    {
        auto rng = ck.rng();
        double worst = 0.0;
        for (int ia = 0; ia < 20; ++ia) {
            const double alpha = 0.25 + 0.25 * ia / 19.0;
            for (int ix = 0; ix < 20; ++ix) {
                const double xi = ix / 20.0;
                const double phase = 2.0 * std::numbers::pi * rng.uniform();
                const double mix = rng.uniform();
                Eigen::Vector2cd eta;
                eta << std::sqrt((1.0 - xi) * mix),
                    std::sqrt((1.0 - xi) * (1.0 - mix)) * Complex(std::cos(phase),
                                                                  std::sin(phase));
                const HermitianEig eig = eig_hermitian(w2_matrix(alpha, xi, eta));
                const double beta = 0.5 - alpha;
                const ZetaPair z = zeta_pm(alpha, xi);
                std::vector<double> expected = {alpha * alpha, beta * beta, z.plus, z.minus};
                std::sort(expected.begin(), expected.end(), std::greater<double>());
                for (int i = 0; i < 4; ++i) {
                    worst = std::max(worst, std::abs(eig.values[i] -
                                                     expected[static_cast<std::size_t>(i)]));
                }
            }
        }
        ck.add_residual("w2_block_matrix_spectrum", worst, 1e-10,
                        "eig(w2_matrix) = {a^2, b^2, zeta+-} on a 20x20 grid");
    }
    {
        bool agree = true;
        double worst_split = 0.0;
        for (int ia = 0; ia <= 60; ++ia) {
            const double alpha = 0.25 + 0.25 * ia / 60.0;
            for (int ix = 0; ix <= 60; ++ix) {
                const double xi = ix / 61.0;
                const ThresholdForms f = threshold_forms(alpha, xi);
                const bool raw = f.raw_margin <= kBoundaryTol;
                const bool simplified = f.simplified_margin <= kBoundaryTol;
                if (raw != simplified &&
                    std::min(std::abs(f.raw_margin), std::abs(f.simplified_margin)) > 1e-12) {
                    agree = false;
                    worst_split = std::max(
                        worst_split, std::abs(f.raw_margin - f.simplified_margin));
                }
            }
        }
        ck.add("threshold_forms_agree", agree, worst_split,
               "raw and simplified criterion verdicts match on the grid");
    }
    {
        auto rng = ck.rng();
        double worst = 0.0;
        for (int n = 0; n < 200; ++n) {
            const DensityMatrix rho = rank2_configuration(rng);
            const double closed = rank2_closed_form(rho).ell_closed;
            const double bisect = modulus_bisect(rho, Oracle::Ppt, 1e-8).ell;
            worst = std::max(worst, std::abs(closed - bisect));
        }
        ck.add_residual("closed_form_vs_bisection", worst, 1e-6);
    }
    {
        auto rng = ck.rng();
        double min_ell = 1.0;
        for (int n = 0; n < 10000; ++n) {
            min_ell = std::min(min_ell, rank2_closed_form(rank2_configuration(rng)).ell_closed);
        }
        const double attained = rank2_closed_form(lhat2_minimizer_state()).ell_closed;
        const double floor = 1.0 / kSqrt2;
        ck.add("lhat2_infimum",
               min_ell >= floor - 1e-9 && std::abs(attained - floor) <= 1e-9,
               std::min(min_ell - floor, -(std::abs(attained - floor))),
               "min closed-form ell over 10000 configurations, minimizer attains 1/sqrt2");
    }
    {
        // The closed form only covers the shared-eigenvector geometry, but the
        // infimum must hold on the whole rank-2 manifold: check it with the
        // exact oracle on Haar-conjugated spectra.
        auto rng = ck.rng();
        double min_ell = 1.0;
        for (int n = 0; n < 2000; ++n) {
            const DensityMatrix rho = state_with_spectrum(rank2_spec, Dims{2, 2}, rng);
            min_ell = std::min(min_ell, modulus_bisect(rho, Oracle::Ppt, 1e-8).ell);
        }
        ck.add("lhat2_floor_haar_ensemble", min_ell >= 1.0 / kSqrt2 - 1e-6, min_ell,
               "bisection ell over 2000 Haar rank-2 states stays above 1/sqrt2");
    }
    return ck.take();
}

// ---------------------------------------------------------------------------
// convexity

std::vector<CheckResult> suite_convexity(std::uint64_t seed) {
    Checker ck(seed);
    const double tol = 1e-8;

    std::vector<double> measured;

    {
        auto rng = ck.rng();
        double worst = 0.0;  // violation of the harmonic-mean bound
        for (int n = 0; n < 500; ++n) {
            const DensityMatrix rho = random_state(Dims{2, 2}, rng);
            const DensityMatrix phi = random_state(Dims{2, 2}, rng);
            const double er = modulus_bisect(rho, Oracle::Ppt, tol).ell;
            const double ep = modulus_bisect(phi, Oracle::Ppt, tol).ell;
            measured.push_back(er);
            measured.push_back(ep);
            for (double s : {0.25, 0.5, 0.75}) {
                const CMat mixed = s * rho.matrix() + (1.0 - s) * phi.matrix();
                const double em =
                    modulus_bisect(make_density(mixed, Dims{2, 2}), Oracle::Ppt, tol).ell;
                measured.push_back(em);
                const double bound = 1.0 / (s / er + (1.0 - s) / ep);
                worst = std::max(worst, bound - em);
            }
        }
        ck.add("reciprocal_ell_convexity", worst <= 1e-6, worst,
               "ell(s rho + (1-s) phi) >= harmonic bound, 500 pairs x 3 weights");
    }
    {
        auto rng = ck.rng();
        double worst = 0.0;
        for (int n = 0; n < 500; ++n) {
            const DensityMatrix rho = random_state(Dims{2, 2}, rng);
            const double ep = modulus_bisect(rho, Oracle::Ppt, tol).ell;
            const double ew = modulus_bisect(rho, Oracle::Wootters, tol).ell;
            measured.push_back(ep);
            measured.push_back(ew);
            worst = std::max(worst, std::abs(ep - ew));
        }
        ck.add_residual("oracle_concordance", worst, 2.0 * tol,
                        "ppt vs wootters bisection on 500 states");
    }
    {
        double floor_violation = 0.0;
        for (double e : measured) {
            floor_violation = std::min(floor_violation, e - (1.0 / 3.0 - 1e-9));
        }
        ck.add("vidal_tarrach_floor", floor_violation >= 0.0, floor_violation,
               "all measured ell >= 1/3 - 1e-9 (" + std::to_string(measured.size()) +
                   " moduli)");
    }
    {
        auto rng = ck.rng();
        bool monotone = true;
        for (int n = 0; n < 100; ++n) {
            const DensityMatrix rho = random_state(Dims{2, 2}, rng);
            const double tstar = modulus_bisect(rho, Oracle::Ppt, tol).ell;
            for (int k = 0; k < 10; ++k) {
                const double t = 1.0 / 3.0 + (k / 9.0) * (2.0 / 3.0);
                if (std::abs(t - tstar) <= 1e-6) continue;
                const bool sep = oracle_separable(segment_state(rho, t), Oracle::Ppt);
                monotone = monotone && (sep == (t < tstar));
            }
        }
        ck.add("segment_monotonicity", monotone, 0.0,
               "verdict flips exactly once along 10 probes per state");
    }
    {
        auto rng = ck.rng();
        double worst = 0.0;
        for (int n = 0; n < 200; ++n) {
            const DensityMatrix rho = rank2_configuration(rng);
            worst = std::max(worst, std::abs(rank2_closed_form(rho).ell_closed -
                                             modulus_bisect(rho, Oracle::Ppt, tol).ell));
        }
        ck.add_residual("rank2_closed_form_agreement", worst, 1e-6);
    }
    {
        auto rng = ck.rng();
        bool agree = true;
        for (int n = 0; n < 1000; ++n) {
            const DensityMatrix rho = random_state(Dims{2, 2}, rng);
            agree = agree && criterion2_check(rho) == oracle_separable(rho, Oracle::Ppt);
        }
        ck.add("criterion2_agreement", agree, 0.0,
               "(1 - d l_d) <= ell(omega) decides like the direct oracle, 1000 states");
    }
    {
        CMat bell = CMat::Zero(4, 4);
        bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
        const double ell_bell =
            modulus_bisect(make_density(bell, Dims{2, 2}), Oracle::Ppt, tol).ell;

        CMat product = CMat::Zero(4, 4);
        product(0, 0) = product(1, 1) = 0.5;  // |0><0| x tau_B
        const double ell_product =
            modulus_bisect(make_density(product, Dims{2, 2}), Oracle::Ppt, tol).ell;

        const double dev = std::abs(ell_bell - 1.0 / 3.0);
        ck.add("floor_attained_at_bell", dev <= 1e-6 && ell_product == 1.0,
               dev, "ell(Bell) = 1/3, fully separable segment reports 1");
    }
    return ck.take();
}

}  // namespace

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"vertices", "containment", "gap", "appendix",
                                                   "convexity"};
    return names;
}

SuiteResult run_verify_suite(const std::string& suite, std::uint64_t seed) {
    SuiteResult out;
    out.name = suite;
    if (suite == "vertices") {
        out.checks = suite_vertices(seed);
    } else if (suite == "containment") {
        out.checks = suite_containment(seed);
    } else if (suite == "gap") {
        out.checks = suite_gap(seed);
    } else if (suite == "appendix") {
        out.checks = suite_appendix(seed);
    } else if (suite == "convexity") {
        out.checks = suite_convexity(seed);
    } else {
        throw DomainError("unknown verify suite: " + suite);
    }
    return out;
}

std::vector<SuiteResult> run_verify(const std::string& suite_or_all, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    if (suite_or_all == "all") {
        for (const std::string& name : verify_suite_names()) {
            out.push_back(run_verify_suite(name, seed));
        }
    } else {
        out.push_back(run_verify_suite(suite_or_all, seed));
    }
    return out;
}

}  // namespace qsep
