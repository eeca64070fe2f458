#pragma once

#include <cstdint>
#include <string>

#include "qsep/io.hpp"
#include "qsep/robustness.hpp"
#include "qsep/sampling.hpp"

namespace qsep::cli {

/// Command cores. Each returns the machine-readable document the
/// corresponding subcommand prints; run() wraps them with argument parsing,
/// output routing and the exit-code contract (0 ok, 1 verification failure,
/// 2 input error).
OrderedJson check_json(const DensityMatrix& rho);
OrderedJson spectrum_json(const Spectrum& lambda);
OrderedJson gap_json(const DensityMatrix& rho);

enum class EllMethod { Auto, Bisect, Closed };
OrderedJson ell_json(const DensityMatrix& rho, EllMethod method, Oracle oracle, double tol);

OrderedJson sample_json(const SampleConfig& config, int jobs);
OrderedJson verify_json(const std::string& suite, std::uint64_t seed);

int run(int argc, const char* const* argv);

}  // namespace qsep::cli
