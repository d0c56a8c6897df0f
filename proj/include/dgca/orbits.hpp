#pragma once

#include <vector>

#include "dgca/binomial.hpp"
#include "dgca/cohomology.hpp"
#include "dgca/coeff_matrix.hpp"
#include "dgca/integer_matrix.hpp"

namespace dgca {

/// The graded automorphism group of p(c) is the subtorus of (k*)^m cut out by
/// b_{i+j} = b_i b_j over the support; its dimension is the corank of the
/// exponent lattice. The lattice depends only on the support pattern.
struct AutDescription {
  int m = 0;              // variable count = dim of the algebra
  IntegerLattice lattice; // rows e_{i+j} - e_i - e_j per support position
  int dim_aut = 0;        // m - rank(lattice)
  int n_of_c = 0;         // support size
  int t_of_c = 0;         // n_of_c - rank(lattice)
};

AutDescription aut_description(const CoeffMatrix& c);

/// Right action of a diagonal automorphism b on a cocycle for extensions to
/// dimension n = dim + 1: (theta.b)_i = b_i b_{n-i} theta_i. The tuple must
/// satisfy the automorphism relations (NotAnAutomorphism).
Cocycle act_cocycle(const CoeffMatrix& c, const Cocycle& theta, const std::vector<Rational>& b);

/// Stabilizer of the line [theta] inside Aut(p(c)): the automorphism lattice
/// extended by (e_i + e_{n-i}) - (e_j + e_{n-j}) over pairs in the support of
/// theta. orbit_dim = dim_aut - dim_stab.
struct StabilizerInfo {
  IntegerLattice stab_lattice;
  int dim_stab = 0;
  int orbit_dim = 0;
};

StabilizerInfo stabilizer_orbit(const CoeffMatrix& c, const Cocycle& theta);

/// Whether all nontrivial central extensions of p(c) to dimension n form a
/// single isomorphism class: exactly one nonvanishing component.
bool unique_extension_class(const CoeffMatrix& c, int n);

/// One row per nonempty subset of nonvanishing components; the subset fixes
/// the support class of cocycles, represented by base values 1. The
/// single-class condition orbit_dim = v - 1 is necessary, not sufficient.
struct ExtensionClassRow {
  std::vector<int> components;  // base vertices of the chosen components
  int v = 0;
  int orbit_dim = 0;
  bool single_class_candidate = false;
};

struct ExtensionClassReport {
  int n = 0;
  std::vector<ExtensionClassRow> rows;
};

ExtensionClassReport extension_class_analysis(const CoeffMatrix& c, int n,
                                              std::size_t max_subset_size = SIZE_MAX);

/// Whether the lines [theta] and [gamma] lie in the same Aut(p(c))-orbit,
/// decided over the closure by one combined binomial system: automorphism
/// rows with right side 1, and line-matching rows with the global scalar
/// eliminated against the first supported vertex.
bool lines_same_orbit(const CoeffMatrix& c, const Cocycle& theta, const Cocycle& gamma);

}  // namespace dgca
