#include "qsep/criteria.hpp"

#include <cmath>

namespace qsep {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::In: return "in";
        case Verdict::Out: return "out";
        case Verdict::Boundary: return "boundary";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

Verdict verdict_from_margin(double margin, double tol) {
    if (margin < -tol) return Verdict::In;
    if (margin > tol) return Verdict::Out;
    return Verdict::Boundary;
}

std::string region_name(Region r) {
    switch (r) {
        case Region::A: return "theorem1";
        case Region::B: return "purity_ball";
        case Region::C: return "verstraete";
        case Region::Theorem2: return "theorem2";
        case Region::GurvitsBarnum: return "gurvits_barnum";
    }
    return "unknown";
}

namespace {

void require_two_qubit(const Spectrum& lambda, const char* op) {
    if (lambda.size() != 4) {
        throw WrongDimension(std::string(op) + ": needs a length-4 spectrum, got " +
                             std::to_string(lambda.size()));
    }
}

void require_length(const Spectrum& lambda, int d, const char* op) {
    if (d < 2) throw DomainError(std::string(op) + ": total dimension must be >= 2");
    if (lambda.size() != d) {
        throw LengthMismatch(std::string(op) + ": spectrum length " +
                             std::to_string(lambda.size()) + " != d = " + std::to_string(d));
    }
}

RegionVerdict make_verdict(Region r, double margin) {
    return RegionVerdict{region_name(r), verdict_from_margin(margin), margin};
}

}  // namespace

double region_margin(Region r, const Spectrum& lambda, int d) {
    switch (r) {
        case Region::A: {
            require_two_qubit(lambda, "region_a");
            const double s2 = std::sqrt(2.0);
            return 3.0 * lambda[0] + s2 * lambda[1] + (3.0 - s2) * lambda[2] - 2.0;
        }
        case Region::B:
            require_two_qubit(lambda, "region_b");
            return lambda.purity() - 1.0 / 3.0;
        case Region::C:
            require_two_qubit(lambda, "region_c");
            return lambda[0] - lambda[2] - 2.0 * std::sqrt(lambda[1] * lambda[3]);
        case Region::Theorem2:
            require_length(lambda, d, "theorem2");
            return 1.0 - 3.0 * lambda[d - 1] - (d - 1.0) * lambda[d - 2];
        case Region::GurvitsBarnum:
            require_length(lambda, d, "gurvits_barnum");
            return lambda.purity() - 1.0 / (d - 1.0);
    }
    throw DomainError("region_margin: unknown region");
}

RegionVerdict region_a(const Spectrum& lambda) {
    return make_verdict(Region::A, region_margin(Region::A, lambda, 4));
}

RegionVerdict region_b(const Spectrum& lambda) {
    return make_verdict(Region::B, region_margin(Region::B, lambda, 4));
}

RegionVerdict region_c(const Spectrum& lambda) {
    return make_verdict(Region::C, region_margin(Region::C, lambda, 4));
}

RegionVerdict theorem2(const Spectrum& lambda, int d) {
    return make_verdict(Region::Theorem2, region_margin(Region::Theorem2, lambda, d));
}

RegionVerdict gurvits_barnum(const Spectrum& lambda, int d) {
    return make_verdict(Region::GurvitsBarnum, region_margin(Region::GurvitsBarnum, lambda, d));
}

CriteriaReport evaluate_all(const Spectrum& lambda, int d) {
    if (lambda.size() != d) {
        throw LengthMismatch("evaluate_all: spectrum length " + std::to_string(lambda.size()) +
                             " != d = " + std::to_string(d));
    }
    CriteriaReport report;
    report.d = d;
    report.spectrum = lambda.values();
    report.purity = lambda.purity();
    if (d == 4) {
        report.criteria.push_back(region_a(lambda));
        report.criteria.push_back(region_b(lambda));
        report.criteria.push_back(region_c(lambda));
    } else {
        for (Region r : {Region::A, Region::B, Region::C}) {
            report.criteria.push_back(RegionVerdict{region_name(r), Verdict::NotApplicable, 0.0});
        }
    }
    if (d >= 2) {
        report.criteria.push_back(theorem2(lambda, d));
        report.criteria.push_back(gurvits_barnum(lambda, d));
    } else {
        for (Region r : {Region::Theorem2, Region::GurvitsBarnum}) {
            report.criteria.push_back(RegionVerdict{region_name(r), Verdict::NotApplicable, 0.0});
        }
    }
    return report;
}

CriteriaReport evaluate_all(const DensityMatrix& rho) {
    CriteriaReport report = evaluate_all(rho.spectrum(), rho.dim());
    report.dims = rho.dims();
    return report;
}

}  // namespace qsep
