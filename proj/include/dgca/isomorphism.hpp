#pragma once

#include <optional>
#include <random>
#include <vector>

#include "dgca/binomial.hpp"
#include "dgca/coeff_matrix.hpp"
#include "dgca/integer_matrix.hpp"

namespace dgca {

/// Certificate against graded isomorphism: either the supports differ, or a
/// kernel character of the exponent system evaluates to a value != 1 on the
/// ratio vector c'/c.
struct IsoObstruction {
  bool pattern_mismatch = false;
  std::vector<mpz_class> kernel_vector;  // over the common support positions
  Rational monomial_value;               // != 1 for character obstructions
};

/// Scaling tuple b solving b_{i+j} c_{ij} = b_i b_j c'_{ij}, encoded as formal
/// radical products of the system right-hand sides: b_v = prod_e rhs_e^{q}.
struct RadicalWitness {
  int dim = 0;
  std::vector<Pos> positions;                    // system rows, level order
  std::vector<Rational> rhs;                     // c'_{ij}/c_{ij} per row
  std::vector<std::vector<Rational>> exponents;  // [degree v-1][row e]
};

struct IsoDecision {
  bool isomorphic = false;
  std::vector<IsoObstruction> obstructions;  // nonempty iff !isomorphic
  std::optional<RadicalWitness> witness;
};

/// Decides graded isomorphism over the algebraic closure. Matrices of equal
/// dimension only (DimMismatch). A returned witness is always verified.
IsoDecision are_isomorphic(const CoeffMatrix& a, const CoeffMatrix& b, bool with_witness = true);

/// Checks the witness rows multiplicatively via prime factorization; exact.
bool verify_witness(const CoeffMatrix& a, const CoeffMatrix& b, const RadicalWitness& w);

/// Whether one support pattern carries exactly one isomorphism class: every
/// kernel character of the exponent system must be a rational combination of
/// the pattern's associativity relations.
struct RigidityReport {
  SupportPattern pattern;
  bool rigid = false;
  std::vector<std::vector<mpz_class>> obstruction_monomials;  // empty iff rigid
};

RigidityReport pattern_rigidity(const SupportPattern& p);

/// Multiplicative associativity relations of a pattern, one row per triple
/// with all four positions in the support, over the support coordinates.
IntMatrix associativity_lattice(const SupportPattern& p);

/// A valid matrix with the given support and pseudo-random rational entries:
/// entries are generated from the orthogonal complement of the associativity
/// lattice, so no rejection is needed.
CoeffMatrix random_valid_filling(const SupportPattern& p, std::mt19937_64& rng);

/// c' obtained from c through the scaling tuple b (all entries nonzero):
/// c'_{ij} = b_{i+j} c_{ij} / (b_i b_j). Always isomorphic to c.
CoeffMatrix rescale_by_tuple(const CoeffMatrix& c, const std::vector<Rational>& b);

}  // namespace dgca
