#include "qsep/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qsep {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double require_number(const OrderedJson& j, const std::string& where) {
    if (!j.is_number()) throw MalformedInput(where + ": expected a number");
    return j.get<double>();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

DensityMatrix parse_state(const std::string& text) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("state JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
        throw MalformedInput("state JSON: need object with \"dims\" and \"matrix\"");
    }
    const auto& jd = j["dims"];
    if (!jd.is_array() || jd.size() != 2 || !jd[0].is_number_integer() ||
        !jd[1].is_number_integer()) {
        throw MalformedInput("state JSON: \"dims\" must be [dA, dB]");
    }
    const Dims dims{jd[0].get<int>(), jd[1].get<int>()};
    if (dims.a < 1 || dims.b < 1) throw MalformedInput("state JSON: dims must be >= 1");
    const int d = dims.total();

    const auto& jm = j["matrix"];
    if (!jm.is_array() || static_cast<int>(jm.size()) != d) {
        throw MalformedInput("state JSON: \"matrix\" must have " + std::to_string(d) + " rows");
    }
    CMat m(d, d);
    for (int r = 0; r < d; ++r) {
        const auto& row = jm[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw MalformedInput("state JSON: row " + std::to_string(r) + " must have " +
                                 std::to_string(d) + " entries");
        }
        for (int c = 0; c < d; ++c) {
            const auto& e = row[static_cast<std::size_t>(c)];
            const std::string where =
                "state JSON: entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
            if (!e.is_array() || e.size() != 2) throw MalformedInput(where + ": expected [re, im]");
            m(r, c) = Complex(require_number(e[0], where), require_number(e[1], where));
        }
    }
    try {
        return make_density(m, dims);
    } catch (const Error& e) {
        throw ValidationFailure(std::string(e.code()) + ": " + e.what());
    }
}

DensityMatrix load_state(const std::filesystem::path& path) { return parse_state(read_file(path)); }

std::string write_state(const DensityMatrix& rho) {
    OrderedJson j;
    j["dims"] = {rho.dims().a, rho.dims().b};
    OrderedJson rows = OrderedJson::array();
    const int d = rho.dim();
    for (int r = 0; r < d; ++r) {
        OrderedJson row = OrderedJson::array();
        for (int c = 0; c < d; ++c) {
            row.push_back({rho.matrix()(r, c).real(), rho.matrix()(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j.dump();
}

Spectrum parse_spectrum(const std::string& text) {
    std::vector<double> values;
    std::size_t pos = 0;
    int field = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string token = text.substr(pos, next - pos);
        ++field;
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            // Allow trailing whitespace/newline only.
            for (std::size_t k = used; k < token.size(); ++k) {
                if (!std::isspace(static_cast<unsigned char>(token[k]))) {
                    throw std::invalid_argument("trailing characters");
                }
            }
            values.push_back(v);
        } catch (const std::exception&) {
            throw MalformedInput("spectrum CSV: field " + std::to_string(field) + " ('" + token +
                                 "') is not a number");
        }
        pos = next + 1;
        if (next == text.size()) break;
    }
    try {
        return Spectrum(std::move(values));
    } catch (const Error& e) {
        throw ValidationFailure(std::string(e.code()) + ": " + e.what());
    }
}

Spectrum load_spectrum(const std::filesystem::path& path) {
    return parse_spectrum(read_file(path));
}

std::string write_spectrum(const Spectrum& lambda) {
    std::string out;
    for (int i = 0; i < lambda.size(); ++i) {
        if (i) out += ',';
        out += format_double(lambda[i]);
    }
    return out;
}

OrderedJson report_json(const CriteriaReport& report) {
    OrderedJson j;
    if (report.dims) {
        j["dims"] = {report.dims->a, report.dims->b};
    } else {
        j["d"] = report.d;
    }
    j["spectrum"] = report.spectrum;
    j["purity"] = report.purity;
    OrderedJson criteria = OrderedJson::array();
    for (const RegionVerdict& rv : report.criteria) {
        OrderedJson rec;
        rec["name"] = rv.name;
        rec["verdict"] = to_string(rv.verdict);
        if (rv.verdict != Verdict::NotApplicable) rec["margin"] = rv.margin;
        criteria.push_back(std::move(rec));
    }
    j["criteria"] = std::move(criteria);
    return j;
}

std::string write_report(const CriteriaReport& report) { return report_json(report).dump(); }

}  // namespace qsep
