#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgca/rational.hpp"

namespace dgca {

/// Factors n >= 1 into (prime, multiplicity) pairs with ascending primes.
std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& n);

/// A nonzero radical expression (-1)^s * prod_i p_i^{e_i} over primes p_i,
/// with rational exponents e_i and s. Multiplication is exponent addition,
/// so equality of radicals reduces to equality of exponent vectors; the
/// formal exponents of -1 only matter modulo 2.
class RadicalValue {
public:
  static RadicalValue one() { return RadicalValue(); }
  static RadicalValue of(const Rational& r);

  /// Multiplies by base^e for a nonzero rational base.
  void mul_pow(const Rational& base, const Rational& e);
  void mul(const RadicalValue& other);

  bool equals(const RadicalValue& other) const;
  bool is_one() const;

  /// The represented value when all exponents are integers; nullopt when a
  /// genuine radical remains.
  std::optional<Rational> as_rational() const;

  const std::map<mpz_class, Rational>& prime_exponents() const { return exp_; }
  const Rational& sign_exponent() const { return neg_exp_; }

private:
  std::map<mpz_class, Rational> exp_;
  Rational neg_exp_;
};

}  // namespace dgca
