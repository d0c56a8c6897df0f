#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace dgca {

/// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static IntMatrix identity(std::size_t n);

  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  std::vector<mpz_class> row(std::size_t r) const;
  void append_row(const std::vector<mpz_class>& v);
  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
mpz_class det(const IntMatrix& m);

/// Row-style Hermite normal form: u * input = h with u unimodular, h in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot). The form is unique for the row lattice.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

HnfResult hnf(const IntMatrix& m);
std::size_t rank_of(const IntMatrix& m);

/// Two-sided reduction u * input * v = d with u, v unimodular and d diagonal
/// (nonzero entries first; no divisibility chain is enforced).
struct DiagonalizeResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
};

DiagonalizeResult diagonalize(const IntMatrix& m);

/// Canonical basis of { u in Q^rows : u * m = 0 }: the Hermite basis of the
/// integer kernel lattice. The lattice is saturated, so every basis row is
/// primitive with positive leading entry.
IntMatrix left_kernel_basis(const IntMatrix& m);

/// Rows of basis generate a sublattice of Z^ambient_dim.
struct IntegerLattice {
  std::size_t ambient_dim = 0;
  IntMatrix basis;  // basis.cols == ambient_dim; zero rows allowed

  static IntegerLattice empty(std::size_t ambient) {
    return IntegerLattice{ambient, IntMatrix(0, ambient)};
  }
};

/// Whether v lies in the Q-linear span of the lattice basis rows.
bool in_rational_span(const std::vector<mpz_class>& v, const IntegerLattice& lat);

}  // namespace dgca
