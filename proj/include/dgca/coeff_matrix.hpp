#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "dgca/rational.hpp"

namespace dgca {

/// A multiplication position (i,j), stored normalized with i <= j.
struct Pos {
  int i = 0, j = 0;
  friend bool operator==(Pos a, Pos b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(Pos a, Pos b) { return !(a == b); }
};

inline Pos norm_pos(int i, int j) { return i <= j ? Pos{i, j} : Pos{j, i}; }

/// Canonical position order: antidiagonal level i+j ascending, then i.
struct PosLevelLess {
  bool operator()(Pos a, Pos b) const {
    if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
    return a.i < b.i;
  }
};

using EntryMap = std::map<Pos, Rational, PosLevelLess>;

/// Symmetric coefficient matrix of a diagonally graded commutative algebra:
/// basis products p_i p_j = c_{ij} p_{i+j}, with c_{ij} = 0 whenever
/// i + j > dim. Only nonzero entries with i <= j are stored; lookups with
/// i > j swap transparently. Instances always satisfy the associativity law
/// c_{jk} c_{i,j+k} = c_{ij} c_{i+j,k}.
class CoeffMatrix {
public:
  using RawEntry = std::tuple<int, int, Rational>;

  /// Checks index ranges, rejects zero values and entries above the
  /// antidiagonal, merges equal duplicates, and verifies associativity over
  /// every triple i+j+k <= dim. Throws DomainError subtypes on failure.
  static CoeffMatrix validate(int dim, const std::vector<RawEntry>& raw);

  /// The zero algebra of the given dimension.
  static CoeffMatrix zero(int dim);

  int dim() const { return dim_; }
  const EntryMap& entries() const { return entries_; }

  /// c_{ij}; zero when absent or when i + j > dim. Indices must be in [1,dim].
  Rational coeff(int i, int j) const;

  bool operator==(const CoeffMatrix& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

private:
  CoeffMatrix(int dim, EntryMap entries) : dim_(dim), entries_(std::move(entries)) {}
  int dim_ = 0;
  EntryMap entries_;
};

/// Positions of nonzero entries of some matrix of dimension dim.
struct SupportPattern {
  int dim = 0;
  std::vector<Pos> support;  // level order, unique

  static SupportPattern from_positions(int dim, std::vector<Pos> positions);
  bool operator==(const SupportPattern&) const = default;
};

struct BasisProduct {
  Rational coefficient;
  std::optional<int> degree;  // i + j, absent when i + j > dim
};

/// p_i p_j in the algebra of c.
BasisProduct multiply_basis(const CoeffMatrix& c, int i, int j);

/// An element of the graded space: coords[i-1] is the coefficient of p_i.
struct GradedVector {
  int dim = 0;
  std::vector<Rational> coords;

  static GradedVector zero(int dim);
  bool operator==(const GradedVector&) const = default;
};

/// Product of two elements in the algebra of c.
GradedVector multiply(const CoeffMatrix& c, const GradedVector& x, const GradedVector& y);

/// Antidiagonal data of a matrix of dimension n, viewed as the 2-cocycle of
/// the central extension that rebuilds it: theta[i-1] = c_{i,n-i}.
struct Cocycle {
  int n = 0;                    // extension dimension; theta has n-1 entries
  std::vector<Rational> theta;  // theta[i-1] = theta_i

  const Rational& value(int i) const { return theta[static_cast<std::size_t>(i) - 1]; }
  bool is_zero() const;
  bool operator==(const Cocycle&) const = default;
};

/// Splits c (dim n) into its truncation (dim n-1, entries with i+j < n) and
/// the antidiagonal cocycle. extend() inverts this exactly.
std::pair<CoeffMatrix, Cocycle> truncate_decompose(const CoeffMatrix& c);

/// Degrees k such that no product lands in degree k; the corresponding basis
/// vectors are a minimal generating set. Always contains 1.
std::vector<int> generators(const CoeffMatrix& c);

SupportPattern support_pattern(const CoeffMatrix& c);

/// The (0,1) representative of a pattern; throws if the pattern does not
/// satisfy the associativity law.
CoeffMatrix canonical_rep(const SupportPattern& p);

}  // namespace dgca
