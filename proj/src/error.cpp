#include "simpd/error.hpp"

namespace simpd {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
        case ErrorCode::RedundantMaximalSimplex: return "RedundantMaximalSimplex";
        case ErrorCode::OrphanVertex: return "OrphanVertex";
        case ErrorCode::NotASimplexOfAmbient: return "NotASimplexOfAmbient";
        case ErrorCode::EmptyGenerators: return "EmptyGenerators";
        case ErrorCode::NotAProductComplex: return "NotAProductComplex";
        case ErrorCode::LevelZero: return "LevelZero";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::CodomainMismatch: return "CodomainMismatch";
        case ErrorCode::NotSimplicial: return "NotSimplicial";
        case ErrorCode::UnmappedVertex: return "UnmappedVertex";
        case ErrorCode::NotASubcomplex: return "NotASubcomplex";
        case ErrorCode::CompositionMismatch: return "CompositionMismatch";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UndefinedName: return "UndefinedName";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

} // namespace simpd
