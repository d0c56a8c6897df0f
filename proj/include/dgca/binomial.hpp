#pragma once

#include <optional>
#include <vector>

#include "dgca/integer_matrix.hpp"
#include "dgca/rational.hpp"

namespace dgca {

/// Dense rational matrix, row-major.
struct RatMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// A left-kernel character u of the exponent matrix together with the value
/// prod_e rhs_e^{u_e}. Over the multiplicative group of an algebraically
/// closed field the system is solvable iff every such value is 1.
struct BinomialObstruction {
  std::vector<mpz_class> kernel_vector;
  Rational monomial_value;
};

/// Decision data for the system prod_v b_v^{A_{e,v}} = r_e in unknowns b_v.
struct BinomialSolution {
  bool solvable = false;
  /// One entry per canonical kernel basis row, value 1 or not.
  std::vector<BinomialObstruction> obstructions;
  /// Present iff solvable: b_v = prod_e r_e^{witness_exponents[v][e]} solves
  /// the system, reading the needed radicals in the closed field.
  std::optional<RatMatrix> witness_exponents;
};

/// Requires rhs.size() == a.rows and every rhs entry nonzero (ZeroRhsEntry).
BinomialSolution solve_binomial(const IntMatrix& a, const std::vector<Rational>& rhs);

}  // namespace dgca
