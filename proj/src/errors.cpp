#include "dgca/errors.hpp"

namespace dgca {

const char* err_name(Err e) {
  switch (e) {
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::SupportAboveAntidiagonal: return "SupportAboveAntidiagonal";
    case Err::AssociativityViolation: return "AssociativityViolation";
    case Err::ZeroEntrySupplied: return "ZeroEntrySupplied";
    case Err::ConflictingEntry: return "ConflictingEntry";
    case Err::DimMismatch: return "DimMismatch";
    case Err::ZeroRhsEntry: return "ZeroRhsEntry";
    case Err::OracleTooLarge: return "OracleTooLarge";
    case Err::NotACocycle: return "NotACocycle";
    case Err::NotAnAutomorphism: return "NotAnAutomorphism";
    case Err::ZeroCocycle: return "ZeroCocycle";
    case Err::MalformedWitness: return "MalformedWitness";
    case Err::InvalidPattern: return "InvalidPattern";
    case Err::FixtureMissing: return "FixtureMissing";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

void fail(Err code, const std::string& msg) {
  throw DomainError(code, std::string(err_name(code)) + ": " + msg);
}

}  // namespace dgca
