#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsep/state.hpp"

namespace qsep {

enum class Verdict { In, Out, Boundary, NotApplicable };

std::string to_string(Verdict v);

/// Membership result for one spectral region. Margins are normalized so
/// that <= 0 means inside: margin < -b_tol -> in, margin > b_tol -> out,
/// otherwise boundary.
struct RegionVerdict {
    std::string name;
    Verdict verdict = Verdict::NotApplicable;
    double margin = 0.0;
};

Verdict verdict_from_margin(double margin, double tol = kBoundaryTol);

enum class Region { A, B, C, Theorem2, GurvitsBarnum };

/// Stable criterion names used in report JSON.
std::string region_name(Region r);

/// Signed margin of the region inequality, normalized to "<= 0 inside".
/// Throws WrongDimension (A/B/C need d = 4) or LengthMismatch/DomainError.
double region_margin(Region r, const Spectrum& lambda, int d);

/// Two-qubit simplex region: 3*l1 + sqrt(2)*l2 + (3 - sqrt(2))*l3 <= 2.
/// A verdict of "in" certifies separability of every state with this spectrum.
RegionVerdict region_a(const Spectrum& lambda);

/// Two-qubit purity ball: sum(l_i^2) <= 1/3.
RegionVerdict region_b(const Spectrum& lambda);

/// Two-qubit region l1 - l3 - 2*sqrt(l2*l4) <= 0.
RegionVerdict region_c(const Spectrum& lambda);

/// Any total dimension d >= 2: 3*l_d + (d-1)*l_{d-1} >= 1.
RegionVerdict theorem2(const Spectrum& lambda, int d);

/// Purity ball sum(l_i^2) <= 1/(d-1), any d >= 2.
RegionVerdict gurvits_barnum(const Spectrum& lambda, int d);

/// Aggregated per-criterion verdicts plus state metadata. `dims` is set when
/// the report was derived from a state; spectrum-only reports carry just `d`.
struct CriteriaReport {
    std::optional<Dims> dims;
    int d = 0;
    std::vector<double> spectrum;
    double purity = 0.0;
    std::vector<RegionVerdict> criteria;
};

/// Runs every applicable region; d != 4 records A/B/C as not applicable.
CriteriaReport evaluate_all(const Spectrum& lambda, int d);
CriteriaReport evaluate_all(const DensityMatrix& rho);

}  // namespace qsep
