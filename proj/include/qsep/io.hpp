#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qsep/criteria.hpp"
#include "qsep/state.hpp"

namespace qsep {

using OrderedJson = nlohmann::ordered_json;

/// State JSON: {"dims":[dA,dB],"matrix":[[[re,im],...],...]} — row-major,
/// one [re,im] pair per entry. Throws MalformedInput on bad syntax/shape and
/// ValidationFailure when the matrix fails the state gates.
DensityMatrix parse_state(const std::string& text);
DensityMatrix load_state(const std::filesystem::path& path);
std::string write_state(const DensityMatrix& rho);

/// Spectrum CSV: one line of comma-separated decimals, sorted after parse.
Spectrum parse_spectrum(const std::string& text);
Spectrum load_spectrum(const std::filesystem::path& path);
std::string write_spectrum(const Spectrum& lambda);

OrderedJson report_json(const CriteriaReport& report);
std::string write_report(const CriteriaReport& report);

}  // namespace qsep
