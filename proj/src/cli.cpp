#include "qsep/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qsep/gap.hpp"
#include "qsep/verify.hpp"
#include "qsep/wootters.hpp"

namespace qsep::cli {

namespace {

OrderedJson matrix_json(const CMat& m) {
    OrderedJson rows = OrderedJson::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool is_two_qubit(const DensityMatrix& rho) { return rho.dims() == Dims{2, 2}; }

bool rank2_spectrum(const DensityMatrix& rho) {
    const Spectrum& s = rho.spectrum();
    return s.size() == 4 && std::abs(s[0] - 0.5) <= 1e-8 && std::abs(s[1] - 0.5) <= 1e-8 &&
           s[2] <= 1e-8 && s[3] <= 1e-8;
}

/// Criterion names in report order, including the exact two-qubit oracles.
const std::vector<std::string>& sample_criteria_names() {
    static const std::vector<std::string> names = {
        region_name(Region::A),        region_name(Region::B), region_name(Region::C),
        region_name(Region::Theorem2), region_name(Region::GurvitsBarnum),
        "ppt",                         "wootters"};
    return names;
}

}  // namespace

OrderedJson check_json(const DensityMatrix& rho) {
    CriteriaReport report = evaluate_all(rho);
    OrderedJson j = report_json(report);
    if (is_two_qubit(rho)) {
        const double pt_min = ppt_min_eigenvalue(rho);
        const WoottersResult w = wootters_check(rho);
        j["criteria"].push_back({{"name", "ppt"},
                                 {"verdict", to_string(verdict_from_margin(-pt_min))},
                                 {"margin", -pt_min}});
        j["criteria"].push_back({{"name", "wootters"},
                                 {"verdict", to_string(verdict_from_margin(w.margin()))},
                                 {"margin", w.margin()}});
        j["ppt_min_eigenvalue"] = pt_min;
        j["concurrence"] = w.concurrence;
    }
    return j;
}

OrderedJson spectrum_json(const Spectrum& lambda) {
    return report_json(evaluate_all(lambda, lambda.size()));
}

OrderedJson gap_json(const DensityMatrix& rho) {
    const GapRepresentation rep = gap_decompose(rho);
    OrderedJson j;
    j["dims"] = {rho.dims().a, rho.dims().b};
    j["spectrum"] = rho.spectrum().values();
    j["mu"] = rep.gaps();
    j["residual_weight"] = rep.residual_weight();
    OrderedJson states = OrderedJson::array();
    for (const DensityMatrix& avg : rep.averaged_states()) {
        OrderedJson rec;
        rec["spectrum"] = avg.spectrum().values();
        rec["matrix"] = matrix_json(avg.matrix());
        states.push_back(std::move(rec));
    }
    j["averaged_states"] = std::move(states);

    OrderedJson props;
    if (rho.dim() == 4) {
        const PropositionResult r = proposition_check(rho, two_qubit_lhat());
        props["two_qubit_lhat"] = {{"sum", r.sum}, {"certified", r.separable_certified}};
    }
    if (rho.dim() >= 2) {
        const PropositionResult r = proposition_check(rho, vidal_tarrach(rho.dim()));
        props["vidal_tarrach"] = {{"sum", r.sum}, {"certified", r.separable_certified}};
    }
    j["proposition"] = std::move(props);
    return j;
}

OrderedJson ell_json(const DensityMatrix& rho, EllMethod method, Oracle oracle, double tol) {
    if (method == EllMethod::Auto) {
        method = is_two_qubit(rho) && rank2_spectrum(rho) ? EllMethod::Closed : EllMethod::Bisect;
    }
    OrderedJson j;
    if (method == EllMethod::Closed) {
        const Rank2Analysis an = rank2_closed_form(rho);  // throws off the rank-2 manifold
        j["ell"] = an.ell_closed;
        j["method"] = to_string(ModulusMethod::ClosedForm);
        j["case"] = to_string(an.overlap_case);
        j["tr_pq"] = an.overlap;
        j["xi"] = an.xi;
        j["near_disjoint"] = an.near_disjoint;
        j["random_robustness"] = 1.0 / an.ell_closed - 1.0;
        return j;
    }
    const ModulusResult r = modulus_report(rho, oracle, tol);
    j["ell"] = r.ell;
    j["method"] = to_string(r.method);
    if (r.method == ModulusMethod::Bisection) {
        j["oracle"] = to_string(r.oracle);
        j["iterations"] = r.iterations;
        j["bracket_width"] = r.bracket_width;
    }
    j["random_robustness"] = r.random_robustness();
    return j;
}

OrderedJson sample_json(const SampleConfig& config, int jobs) {
    config.validate();
    if (jobs < 1) throw DomainError("sample: jobs must be >= 1");
    const int d = config.dims.total();
    const bool two_qubit = config.dims == Dims{2, 2};
    const auto& names = sample_criteria_names();
    const std::size_t n_criteria = names.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    // margins[i] holds one row per sample; NaN marks "not applicable".
    std::vector<std::vector<double>> margins(
        static_cast<std::size_t>(config.count), std::vector<double>(n_criteria, nan));
    std::vector<double> ells(static_cast<std::size_t>(config.count), nan);

    auto worker = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            SampleRng rng(config.seed, static_cast<std::uint64_t>(i));
            Spectrum s = config.spectrum     ? Spectrum(*config.spectrum)
                         : config.region     ? spectrum_in_region(*config.region, d, rng)
                                             : spectrum_uniform(d, rng);
            const DensityMatrix rho = state_with_spectrum(s, config.dims, rng);
            auto& row = margins[static_cast<std::size_t>(i)];
            if (d == 4) {
                row[0] = region_margin(Region::A, s, 4);
                row[1] = region_margin(Region::B, s, 4);
                row[2] = region_margin(Region::C, s, 4);
            }
            row[3] = region_margin(Region::Theorem2, s, d);
            row[4] = region_margin(Region::GurvitsBarnum, s, d);
            if (two_qubit) {
                row[5] = -ppt_min_eigenvalue(rho);
                row[6] = wootters_check(rho).margin();
                ells[static_cast<std::size_t>(i)] = modulus_bisect(rho).ell;
            }
        }
    };

    if (jobs == 1 || config.count < 2) {
        worker(0, config.count);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (config.count + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            const int begin = j * chunk;
            const int end = std::min(config.count, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }

    // Sequential, index-ordered reduction keeps the output independent of
    // the worker count.
    OrderedJson j;
    j["seed"] = config.seed;
    j["count"] = config.count;
    j["dims"] = {config.dims.a, config.dims.b};
    if (config.region) j["region"] = region_name(*config.region);
    if (config.spectrum) j["fixed_spectrum"] = *config.spectrum;

    OrderedJson stats = OrderedJson::array();
    for (std::size_t c = 0; c < n_criteria; ++c) {
        double lo = nan, hi = nan;
        long in_count = 0, applicable = 0;
        for (const auto& row : margins) {
            const double m = row[c];
            if (std::isnan(m)) continue;
            ++applicable;
            if (m <= kBoundaryTol) ++in_count;
            lo = std::isnan(lo) ? m : std::min(lo, m);
            hi = std::isnan(hi) ? m : std::max(hi, m);
        }
        OrderedJson rec;
        rec["name"] = names[c];
        rec["applicable"] = applicable;
        rec["in"] = in_count;
        if (applicable > 0) {
            rec["min_margin"] = lo;
            rec["max_margin"] = hi;
        }
        stats.push_back(std::move(rec));
    }
    j["criteria"] = std::move(stats);

    OrderedJson agreement = OrderedJson::array();
    for (std::size_t a = 0; a < n_criteria; ++a) {
        OrderedJson row_out = OrderedJson::array();
        for (std::size_t b = 0; b < n_criteria; ++b) {
            long agree = 0;
            for (const auto& row : margins) {
                if (std::isnan(row[a]) || std::isnan(row[b])) continue;
                if ((row[a] <= kBoundaryTol) == (row[b] <= kBoundaryTol)) ++agree;
            }
            row_out.push_back(agree);
        }
        agreement.push_back(std::move(row_out));
    }
    j["agreement_matrix"] = std::move(agreement);

    double min_ell = nan, max_ell = nan;
    for (double e : ells) {
        if (std::isnan(e)) continue;
        min_ell = std::isnan(min_ell) ? e : std::min(min_ell, e);
        max_ell = std::isnan(max_ell) ? e : std::max(max_ell, e);
    }
    if (!std::isnan(min_ell)) {
        j["min_ell"] = min_ell;
        j["max_ell"] = max_ell;
    }
    return j;
}

OrderedJson verify_json(const std::string& suite, std::uint64_t seed) {
    const std::vector<SuiteResult> results = run_verify(suite, seed);
    OrderedJson j;
    j["suite"] = suite;
    j["seed"] = seed;
    bool all_pass = true;
    OrderedJson suites = OrderedJson::array();
    for (const SuiteResult& sr : results) {
        all_pass = all_pass && sr.passed();
        OrderedJson rec;
        rec["name"] = sr.name;
        rec["passed"] = sr.passed();
        OrderedJson checks = OrderedJson::array();
        for (const CheckResult& c : sr.checks) {
            OrderedJson cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["residual"] = c.residual;
            if (!c.note.empty()) cj["note"] = c.note;
            checks.push_back(std::move(cj));
        }
        rec["checks"] = std::move(checks);
        suites.push_back(std::move(rec));
    }
    j["passed"] = all_pass;
    j["suites"] = std::move(suites);
    return j;
}

namespace {

// ---------------------------------------------------------------------------
// pretty rendering

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string pretty_criteria(const OrderedJson& j) {
    std::string out;
    if (j.contains("dims")) {
        out += "dims: " + j["dims"].dump() + "\n";
    }
    out += "spectrum:";
    for (const auto& v : j["spectrum"]) out += " " + fmt(v.get<double>());
    out += "\npurity: " + fmt(j["purity"].get<double>()) + "\n";
    out += "criterion            verdict         margin\n";
    for (const auto& rec : j["criteria"]) {
        char line[96];
        std::snprintf(line, sizeof line, "%-20s %-14s %s\n",
                      rec["name"].get<std::string>().c_str(),
                      rec["verdict"].get<std::string>().c_str(),
                      rec.contains("margin") ? fmt(rec["margin"].get<double>()).c_str() : "-");
        out += line;
    }
    if (j.contains("concurrence")) out += "concurrence: " + fmt(j["concurrence"].get<double>()) + "\n";
    return out;
}

std::string pretty_verify(const OrderedJson& j) {
    std::string out;
    for (const auto& suite : j["suites"]) {
        for (const auto& c : suite["checks"]) {
            char line[160];
            std::snprintf(line, sizeof line, "[%s] %s/%-34s residual %s\n",
                          c["pass"].get<bool>() ? "PASS" : "FAIL",
                          suite["name"].get<std::string>().c_str(),
                          c["name"].get<std::string>().c_str(),
                          fmt(c["residual"].get<double>()).c_str());
            out += line;
        }
    }
    out += j["passed"].get<bool>() ? "all checks passed\n" : "FAILURES present\n";
    return out;
}

std::string pretty_generic(const OrderedJson& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw MalformedInput("cannot open output file " + output_path);
    out << text;
}

Region parse_region(const std::string& name) {
    if (name == "a" || name == "theorem1") return Region::A;
    if (name == "b" || name == "purity_ball") return Region::B;
    if (name == "c" || name == "verstraete") return Region::C;
    if (name == "theorem2") return Region::Theorem2;
    if (name == "gb" || name == "gurvits_barnum") return Region::GurvitsBarnum;
    throw DomainError("unknown region: " + name);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"spectral separability toolkit for bipartite quantum states"};
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty = false;
    std::string output_path;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    app.add_option("-o,--output", output_path, "write output to a file");

    std::string state_path, method = "auto", oracle_name = "ppt", region_name_arg, spectrum_csv,
                suite = "all";
    std::vector<double> spectrum_values;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    int count = 1000, jobs = 1;
    std::vector<int> dims_arg = {2, 2};

    auto* cmd_check = app.add_subcommand("check", "all criteria plus exact oracles on one state");
    cmd_check->add_option("state", state_path, "state JSON file")->required();

    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "region membership for an eigenvalue list");
    cmd_spectrum->add_option("values", spectrum_values, "eigenvalues (whitespace separated)")
        ->expected(-1)
        ->required();

    auto* cmd_gap = app.add_subcommand("gap", "gap representation and proposition sums");
    cmd_gap->add_option("state", state_path, "state JSON file")->required();

    auto* cmd_ell = app.add_subcommand("ell", "modulus of separability");
    cmd_ell->add_option("state", state_path, "state JSON file")->required();
    cmd_ell->add_option("--method", method, "bisect|closed|auto")
        ->check(CLI::IsMember({"bisect", "closed", "auto"}));
    cmd_ell->add_option("--oracle", oracle_name, "ppt|wootters")
        ->check(CLI::IsMember({"ppt", "wootters"}));
    cmd_ell->add_option("--tol", tol, "bisection tolerance");

    auto* cmd_sample = app.add_subcommand("sample", "seeded batch statistics");
    cmd_sample->add_option("--seed", seed, "sample seed")->envname("QSEP_SEED");
    cmd_sample->add_option("--count", count, "number of states");
    cmd_sample->add_option("--dims", dims_arg, "factor dimensions")->expected(2);
    cmd_sample->add_option("--region", region_name_arg, "a|b|c|theorem2|gb spectrum constraint");
    cmd_sample->add_option("--spectrum", spectrum_csv, "fixed spectrum (CSV)");
    cmd_sample->add_option("--jobs", jobs, "worker threads");

    auto* cmd_verify = app.add_subcommand("verify", "run invariant suites");
    cmd_verify->add_option("--suite", suite, "vertices|containment|gap|appendix|convexity|all");
    cmd_verify->add_option("--seed", seed, "suite seed")->envname("QSEP_SEED");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        OrderedJson j;
        std::string text;
        int code = 0;
        if (*cmd_check) {
            j = check_json(load_state(state_path));
            text = pretty ? pretty_criteria(j) : j.dump() + "\n";
        } else if (*cmd_spectrum) {
            j = spectrum_json(Spectrum(spectrum_values));
            text = pretty ? pretty_criteria(j) : j.dump() + "\n";
        } else if (*cmd_gap) {
            j = gap_json(load_state(state_path));
            text = pretty ? pretty_generic(j) : j.dump() + "\n";
        } else if (*cmd_ell) {
            const EllMethod m = method == "bisect"   ? EllMethod::Bisect
                                : method == "closed" ? EllMethod::Closed
                                                     : EllMethod::Auto;
            const Oracle o = oracle_name == "wootters" ? Oracle::Wootters : Oracle::Ppt;
            j = ell_json(load_state(state_path), m, o, tol);
            text = pretty ? pretty_generic(j) : j.dump() + "\n";
        } else if (*cmd_sample) {
            SampleConfig config;
            config.seed = seed;
            config.count = count;
            config.dims = Dims{dims_arg[0], dims_arg[1]};
            if (!spectrum_csv.empty()) config.spectrum = parse_spectrum(spectrum_csv).values();
            if (!region_name_arg.empty()) config.region = parse_region(region_name_arg);
            j = sample_json(config, jobs);
            text = pretty ? pretty_generic(j) : j.dump() + "\n";
        } else if (*cmd_verify) {
            if (suite != "all") {
                const auto& names = verify_suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end()) {
                    throw DomainError("unknown verify suite: " + suite);
                }
            }
            j = verify_json(suite, seed);
            if (!j["passed"].get<bool>()) code = 1;
            text = pretty ? pretty_verify(j) : j.dump() + "\n";
        }
        emit(text, output_path);
        return code;
    } catch (const Error& e) {
        OrderedJson err;
        err["error"] = {{"type", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        OrderedJson err;
        err["error"] = {{"type", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}

}  // namespace qsep::cli
