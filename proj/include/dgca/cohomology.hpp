#pragma once

#include <map>
#include <vector>

#include "dgca/coeff_matrix.hpp"

namespace dgca {

enum class ComponentKind { contractible, generic_vanishing, generic_nonvanishing };

const char* component_kind_name(ComponentKind k);

/// An edge of the cocycle relation graph on vertices [n-1]. Complementary
/// pairs p + q = n carry the relation theta_p = theta_q. For p + q > n the
/// unique triple i = n-q, j = p+q-n, k = n-p with c_{ij} c_{jk} != 0 carries
/// c_{ij} theta_p = c_{jk} theta_q.
struct GraphEdge {
  int p = 0, q = 0;
  bool equal = false;       // p + q = n edge
  Rational left, right;     // c_{ij}, c_{jk} for ratio edges
  int i = 0, j = 0, k = 0;  // witness triple for ratio edges
};

struct ComponentInfo {
  std::vector<int> vertices;  // ascending
  ComponentKind kind = ComponentKind::generic_nonvanishing;
  int base_vertex = 0;  // lowest vertex
  /// Nonvanishing components only: theta_v = ratio_to_base[v] * theta_base.
  std::map<int, Rational> ratio_to_base;
};

struct GradedGraph {
  int n = 0;  // extension dimension; the matrix has dimension n-1
  std::vector<GraphEdge> edges;
  std::vector<int> forced_zero;  // vertices annihilated by one-sided relations
  std::vector<ComponentInfo> components;  // ordered by base vertex

  const ComponentInfo& component_of(int vertex) const;
  std::size_t generic_count() const;
  std::size_t nonvanishing_count() const;
};

/// Builds the relation graph of c (dimension n-1) for extensions to
/// dimension n, classifying every connected component. A component is
/// contractible when a one-sided relation kills one of its vertices;
/// otherwise it is generic, and it vanishes exactly when some circuit has an
/// inconsistent ratio product.
GradedGraph build_graph(const CoeffMatrix& c, int n);

/// Basis of the graded 2-cocycle space: one cocycle per nonvanishing
/// component, value 1 at the base vertex, the rest by ratio propagation.
struct CocycleSpace {
  int n = 0;
  std::vector<Cocycle> basis;
  int u_of_c = 0;  // number of generic components
  int dim = 0;     // = basis.size() <= u_of_c
};

CocycleSpace cocycle_space(const CoeffMatrix& c, int n);

/// Exact check of the symmetry and triple relations.
bool is_cocycle(const CoeffMatrix& c, int n, const Cocycle& theta);

/// Central extension: the entries of c plus theta on the antidiagonal.
/// Throws NotACocycle when theta fails is_cocycle.
CoeffMatrix extend(const CoeffMatrix& c, const Cocycle& theta);

}  // namespace dgca
