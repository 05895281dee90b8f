#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expwell {

enum class ErrorKind {
    DomainError,
    PoleInParameter,
    NoConvergence,
    NumericalBreakdown,
    QuadratureFailure,
    DivisionDegenerate,
    ScanIncomplete,
    NotAnEigenvalue,
    ParamMismatch,
    TooFewLevels,
    IntegrationFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map them to exit codes and reports.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleInParameter: return "PoleInParameter";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::DivisionDegenerate: return "DivisionDegenerate";
    case ErrorKind::ScanIncomplete: return "ScanIncomplete";
    case ErrorKind::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorKind::ParamMismatch: return "ParamMismatch";
    case ErrorKind::TooFewLevels: return "TooFewLevels";
    case ErrorKind::IntegrationFailure: return "IntegrationFailure";
    }
    return "Unknown";
}

}  // namespace expwell
