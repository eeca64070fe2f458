// Acceptance suite: one numbered criterion per block, one PASS/FAIL line each.
// Usage: qsep_acceptance [path-to-qsep-cli]   (the CLI path is needed for the
// byte-determinism criterion; it is supplied by ctest).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qsep/cli.hpp"
#include "qsep/criteria.hpp"
#include "qsep/gap.hpp"
#include "qsep/robustness.hpp"
#include "qsep/sampling.hpp"
#include "qsep/state.hpp"
#include "qsep/wootters.hpp"

using namespace qsep;

namespace {

int g_failures = 0;

void report(int criterion, const char* label, bool pass, double residual,
            const char* residual_label) {
    std::printf("[%s] criterion %2d: %-46s %s = %.3e\n", pass ? "PASS" : "FAIL", criterion,
                label, residual_label, residual);
    if (!pass) ++g_failures;
}

const double kSqrt2 = std::sqrt(2.0);

std::vector<Spectrum> vertices() {
    return {
        Spectrum({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}),
        Spectrum({(2 + kSqrt2) / 8, (2 + kSqrt2) / 8, (2 - kSqrt2) / 8, (2 - kSqrt2) / 8}),
        Spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0}),
        Spectrum({0.25, 0.25, 0.25, 0.25}),
    };
}

std::string fixture(const char* name) {
    return std::string(QSEP_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<double> g_measured_ell;

double bisect_ell(const DensityMatrix& rho) {
    const double ell = modulus_bisect(rho, Oracle::Ppt, 1e-8).ell;
    g_measured_ell.push_back(ell);
    return ell;
}

// ---------------------------------------------------------------------------

void criterion_1_vertices() {
    const auto vs = vertices();
    // Three vertices sit on the hyperplane; tau is interior at margin -1/2.
    const double expected[4] = {0.0, 0.0, 0.0, -0.5};
    double worst = 0.0;
    bool member = true;
    for (int i = 0; i < 4; ++i) {
        const double m = region_a(vs[static_cast<std::size_t>(i)]).margin;
        worst = std::max(worst, std::abs(m - expected[i]));
        member = member && m <= 1e-12;
    }

    SampleRng rng(11);
    double worst_combo = -1.0;
    for (int n = 0; n < 100; ++n) {
        double w[4], sum = 0;
        for (double& x : w) sum += (x = rng.exponential());
        std::vector<double> combo(4, 0.0);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                combo[static_cast<std::size_t>(i)] += w[k] / sum * vs[static_cast<std::size_t>(k)][i];
        worst_combo = std::max(worst_combo, region_a(Spectrum(combo)).margin);
    }
    report(1, "theorem-1 vertices and their mixtures", member && worst <= 1e-12 && worst_combo <= 1e-12,
           std::max(worst, worst_combo), "max deviation");
}

void criterion_2_region_comparison() {
    const Spectrum v2 = vertices()[1];
    const double purity_dev = std::abs(v2.purity() - 3.0 / 8);
    const double a_dev = std::abs(region_a(v2).margin);
    const bool b_out = region_b(v2).verdict == Verdict::Out;

    std::vector<double> mix(4);
    const double pure[4] = {0.75, 0.25, 0.0, 0.0};
    for (int i = 0; i < 4; ++i) mix[static_cast<std::size_t>(i)] = (kSqrt2 / 3) * pure[i] + (1 - kSqrt2 / 3) * 0.25;
    const Spectrum m(mix);
    const double mix_purity_dev = std::abs(m.purity() - 1.0 / 3);
    const double mix_margin_dev = std::abs(region_a(m).margin - (5.0 / 3 + kSqrt2 / 4 - 2.0));
    const bool a_out = region_a(m).margin > 0;

    const double worst = std::max({purity_dev, a_dev, mix_purity_dev, mix_margin_dev});
    report(2, "in-A-not-in-B and in-B-not-in-A spectra", worst <= 1e-12 && b_out && a_out, worst,
           "max deviation");
}

void criterion_3_containments() {
    const double expected_c[4] = {0.0, 0.0, 0.0, -0.5};
    const auto vs = vertices();
    double worst_vertex = 0.0;
    for (int i = 0; i < 4; ++i) {
        worst_vertex =
            std::max(worst_vertex, std::abs(region_c(vs[static_cast<std::size_t>(i)]).margin - expected_c[i]));
    }

    SampleRng rng(13);
    bool a_in_c = true;
    for (int n = 0; n < 100000; ++n) {
        const Spectrum s = spectrum_uniform(4, rng);
        if (region_a(s).margin <= kBoundaryTol && region_c(s).margin > kBoundaryTol) a_in_c = false;
    }

    double worst_identity = 0.0;
    int produced = 0;
    while (produced < 100000) {
        const Spectrum raw = spectrum_uniform(4, rng);
        const double p = raw.purity();
        if (p < 1.0 / 3) continue;
        ++produced;
        const double scale = std::sqrt((1.0 / 3 - 0.25) / (p - 0.25));
        std::vector<double> v(4);
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = 0.25 + scale * (raw[i] - 0.25);
        const Spectrum s(v);
        const double lhs = (s[0] - s[2]) * (s[0] - s[2]) - 4 * s[1] * s[3];
        const double rhs = -3 * (s[0] + s[2] - 2.0 / 3) * (s[0] + s[2] - 2.0 / 3);
        worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
    }

    report(3, "A inside C; purity-sphere identity", worst_vertex <= 1e-12 && a_in_c && worst_identity <= 1e-9,
           worst_identity, "max identity residual");
}

void criterion_4_soundness() {
    SampleRng rng(17);
    double min_eig = 1.0;
    for (Region r : {Region::A, Region::B, Region::C, Region::Theorem2, Region::GurvitsBarnum}) {
        for (int n = 0; n < 10000; ++n) {
            const DensityMatrix rho = state_with_spectrum(spectrum_in_region(r, 4, rng), Dims{2, 2}, rng);
            min_eig = std::min(min_eig, ppt_min_eigenvalue(rho));
        }
    }
    report(4, "criteria members all pass PPT (5 x 10^4 states)", min_eig >= -1e-9, min_eig,
           "min PT eigenvalue");
}

void criterion_5_concordance() {
    SampleRng rng(19);
    int disagreements = 0, in_band = 0;
    for (int n = 0; n < 10000; ++n) {
        const DensityMatrix rho = random_state(Dims{2, 2}, rng);
        const WoottersResult w = wootters_check(rho);
        if (std::abs(w.margin()) < 1e-7) {
            ++in_band;
            continue;
        }
        if (w.separable != is_ppt(rho)) ++disagreements;
    }
    std::printf("            (guard band hits: %d / 10000)\n", in_band);
    report(5, "Wootters/PPT verdict agreement", disagreements == 0,
           static_cast<double>(disagreements), "disagreements");
}

void criterion_6_appendix_formula() {
    SampleRng rng(23);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
        const DensityMatrix rho = rank2_configuration(rng);
        worst = std::max(worst, std::abs(rank2_closed_form(rho).ell_closed - bisect_ell(rho)));
    }

    double min_ell = 1.0;
    for (int n = 0; n < 10000; ++n) {
        min_ell = std::min(min_ell, rank2_closed_form(rank2_configuration(rng)).ell_closed);
    }

    const double attained =
        rank2_closed_form(load_state(fixture("lhat2_minimizer.json"))).ell_closed;
    const bool pass = worst <= 1e-6 && min_ell >= 1.0 / kSqrt2 - 1e-9 &&
                      std::abs(attained - 1.0 / kSqrt2) <= 1e-9;
    report(6, "closed form = bisection; infimum 1/sqrt2", pass, worst, "max |closed - bisect|");
}

void criterion_7_zeta_identities() {
    double worst_sq = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double alpha = 0.25 + 0.25 * i / 49.0;
        worst_sq = std::max(worst_sq, std::abs(zeta_pm(alpha, 1.0).plus - alpha * alpha));
    }

    SampleRng rng(29);
    double worst_block = 0.0;
    bool forms_agree = true;
    for (int ia = 0; ia < 20; ++ia) {
        const double alpha = 0.25 + 0.25 * ia / 19.0;
        for (int ix = 0; ix < 20; ++ix) {
            const double xi = ix / 20.0;
            const double mix = rng.uniform();
            const double phase = 6.283185307179586 * rng.uniform();
            Eigen::Vector2cd eta;
            eta << std::sqrt((1 - xi) * mix),
                std::sqrt((1 - xi) * (1 - mix)) * Complex(std::cos(phase), std::sin(phase));
            const HermitianEig eig = eig_hermitian(w2_matrix(alpha, xi, eta));
            const ZetaPair z = zeta_pm(alpha, xi);
            const double beta = 0.5 - alpha;
            std::vector<double> expected = {alpha * alpha, beta * beta, z.plus, z.minus};
            std::sort(expected.begin(), expected.end(), std::greater<double>());
            for (int i = 0; i < 4; ++i) {
                worst_block = std::max(worst_block,
                                       std::abs(eig.values[i] - expected[static_cast<std::size_t>(i)]));
            }
            const ThresholdForms f = threshold_forms(alpha, xi);
            if ((f.raw_margin <= kBoundaryTol) != (f.simplified_margin <= kBoundaryTol) &&
                std::min(std::abs(f.raw_margin), std::abs(f.simplified_margin)) > 1e-12) {
                forms_agree = false;
            }
        }
    }
    report(7, "zeta identities and W^2 block spectrum", worst_sq <= 1e-12 && worst_block <= 1e-9 && forms_agree,
           std::max(worst_sq, worst_block), "max residual");
}

void criterion_8_moduli() {
    const double bell = bisect_ell(load_state(fixture("bell.json")));
    const double product = bisect_ell(load_state(fixture("product_zero_tau.json")));

    double floor_violation = 0.0;
    for (double e : g_measured_ell) {
        floor_violation = std::min(floor_violation, e - (1.0 / 3 - 1e-9));
    }
    const bool pass = std::abs(bell - 1.0 / 3) <= 1e-6 && product == 1.0 && floor_violation >= 0.0;
    std::printf("            (moduli measured so far: %zu)\n", g_measured_ell.size());
    report(8, "ell(Bell)=1/3, ell(product)=1, floor respected", pass, std::abs(bell - 1.0 / 3),
           "|ell(Bell) - 1/3|");
}

void criterion_9_gap_representation() {
    SampleRng rng(31);
    double worst_recon = 0.0, worst_spec = 0.0, worst_purity = 0.0;
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
                const Spectrum sj = rep.averaged_states()[static_cast<std::size_t>(j - 1)].spectrum();
                for (int i = 0; i < d; ++i) {
                    worst_spec = std::max(worst_spec, std::abs(sj[i] - (i < j ? 1.0 / j : 0.0)));
                }
            }
            worst_purity = std::max(
                worst_purity, std::abs(rep.averaged_states().back().purity() - 1.0 / (d - 1)));
        }
    }
    const bool pass = worst_recon <= 1e-12 && worst_spec <= 1e-10 && worst_purity <= 1e-12;
    report(9, "gap reconstruction at d = 4 and d = 6", pass, worst_recon, "max Frobenius residual");
}

void criterion_10_proposition_consistency() {
    SampleRng rng(37);
    bool agree1 = true;
    for (int n = 0; n < 10000; ++n) {
        agree1 = agree1 && theorem1_from_proposition(spectrum_uniform(4, rng)).agree;
    }
    bool agree2 = true;
    for (int d : {4, 6, 9}) {
        for (int n = 0; n < 10000; ++n) {
            agree2 = agree2 && theorem2_from_proposition(spectrum_uniform(d, rng), d).agree;
        }
    }
    double worst_gap = -1.0;
    for (int n = 0; n < 100000; ++n) {
        const Spectrum s = spectrum_uniform(4, rng);
        worst_gap = std::max(worst_gap,
                             region_a(s).margin - region_margin(Region::Theorem2, s, 4));
    }
    report(10, "proposition equivalences; thm2 => thm1", agree1 && agree2 && worst_gap <= 1e-12,
           worst_gap, "max (margin_A - margin_thm2)");
}

void criterion_11_convexity() {
    SampleRng rng(41);
    double worst = 0.0;
    for (int n = 0; n < 500; ++n) {
        const DensityMatrix rho = random_state(Dims{2, 2}, rng);
        const DensityMatrix phi = random_state(Dims{2, 2}, rng);
        const double er = bisect_ell(rho);
        const double ep = bisect_ell(phi);
        for (double s : {0.25, 0.5, 0.75}) {
            const DensityMatrix mixed =
                make_density(s * rho.matrix() + (1 - s) * phi.matrix(), Dims{2, 2});
            const double em = bisect_ell(mixed);
            worst = std::max(worst, 1.0 / (s / er + (1 - s) / ep) - em);
        }
    }
    report(11, "reciprocal-ell convexity (500 pairs x 3 weights)", worst <= 1e-6, worst,
           "max bound violation");
}

void criterion_12_determinism(const char* cli_path) {
    if (cli_path == nullptr) {
        report(12, "byte-identical verify runs (CLI path missing)", false, 1.0, "skipped");
        return;
    }
    const std::string out1 = "/tmp/qsep_acceptance_run1.json";
    const std::string out2 = "/tmp/qsep_acceptance_run2.json";
    const std::string base = std::string("\"") + cli_path + "\" verify --suite all --seed 42 -o ";
    const int rc1 = std::system((base + out1).c_str());
    const int rc2 = std::system((base + out2).c_str());
    const std::string a = slurp(out1), b = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    const bool pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report(12, "byte-identical verify --suite all --seed 42", pass,
           static_cast<double>(a == b ? 0 : 1), "byte mismatch");
}

}  // namespace

int main(int argc, char** argv) {
    std::printf("acceptance suite\n");
    criterion_1_vertices();
    criterion_2_region_comparison();
    criterion_3_containments();
    criterion_4_soundness();
    criterion_5_concordance();
    criterion_6_appendix_formula();
    criterion_7_zeta_identities();
    criterion_8_moduli();
    criterion_9_gap_representation();
    criterion_10_proposition_consistency();
    criterion_11_convexity();
    criterion_12_determinism(argc > 1 ? argv[1] : nullptr);

    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
