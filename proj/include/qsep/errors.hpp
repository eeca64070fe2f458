#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qsep {

/// Base of all library errors. `code()` is a stable machine-readable tag
/// (mirrored into CLI error JSON); `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define QSEP_ERROR_TYPE(Name)                                              \
    struct Name : Error {                                                  \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

QSEP_ERROR_TYPE(NonSquare);
QSEP_ERROR_TYPE(NotHermitian);
QSEP_ERROR_TYPE(NotPSD);
QSEP_ERROR_TYPE(NotUnitTrace);
QSEP_ERROR_TYPE(DimensionMismatch);
QSEP_ERROR_TYPE(WrongDimension);
QSEP_ERROR_TYPE(LengthMismatch);
QSEP_ERROR_TYPE(MalformedInput);
QSEP_ERROR_TYPE(ValidationFailure);
QSEP_ERROR_TYPE(DomainError);
QSEP_ERROR_TYPE(SpectrumMismatch);
QSEP_ERROR_TYPE(DegenerateTau);
QSEP_ERROR_TYPE(OracleUnavailable);
QSEP_ERROR_TYPE(RejectionTimeout);

#undef QSEP_ERROR_TYPE

}  // namespace qsep
