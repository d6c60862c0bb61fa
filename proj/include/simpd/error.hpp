#pragma once

#include <stdexcept>
#include <string>

namespace simpd {

enum class ErrorCode {
    DuplicateVertexInSimplex,
    RedundantMaximalSimplex,
    OrphanVertex,
    NotASimplexOfAmbient,
    EmptyGenerators,
    NotAProductComplex,
    LevelZero,
    InvalidRange,
    DomainMismatch,
    CodomainMismatch,
    NotSimplicial,
    UnmappedVertex,
    NotASubcomplex,
    CompositionMismatch,
    SearchBudgetExceeded,
    BudgetExceeded,
    OracleCapExceeded,
    ParseError,
    UndefinedName,
    DuplicateName,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. `what()` always starts with the code name.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace simpd
