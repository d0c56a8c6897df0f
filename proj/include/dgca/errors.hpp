#pragma once

#include <stdexcept>
#include <string>

namespace dgca {

enum class Err {
  IndexOutOfRange,
  SupportAboveAntidiagonal,
  AssociativityViolation,
  ZeroEntrySupplied,
  ConflictingEntry,
  DimMismatch,
  ZeroRhsEntry,
  OracleTooLarge,
  NotACocycle,
  NotAnAutomorphism,
  ZeroCocycle,
  MalformedWitness,
  InvalidPattern,
  FixtureMissing,
  BadInput,
};

const char* err_name(Err e);

class DomainError : public std::runtime_error {
public:
  DomainError(Err code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

/// Carries the first failing triple (i,j,k) of the associativity law.
class AssociativityError : public DomainError {
public:
  AssociativityError(int i, int j, int k, const std::string& msg)
      : DomainError(Err::AssociativityViolation, msg), i(i), j(j), k(k) {}
  int i, j, k;
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace dgca
