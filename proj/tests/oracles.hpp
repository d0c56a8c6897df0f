// Test-side oracles, independent of the library paths they check.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "dgca/coeff_matrix.hpp"
#include "dgca/cohomology.hpp"

namespace dgca::testing {

// Dimension of the solution space of all symmetry and triple relations for
// extensions of c to dimension n, by plain Gaussian elimination.
inline int dense_relation_nullity(const CoeffMatrix& c, int n) {
  std::vector<std::vector<Rational>> rows;
  const int vars = n - 1;
  for (int i = 1; 2 * i < n; ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(vars));
    row[static_cast<std::size_t>(i) - 1] += Rational(1);
    row[static_cast<std::size_t>(n - i) - 1] -= Rational(1);
    rows.push_back(std::move(row));
  }
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; i + j <= n - 1; ++j) {
      const int k = n - i - j;
      if (k < i) continue;
      std::vector<Rational> row(static_cast<std::size_t>(vars));
      row[static_cast<std::size_t>(i + j) - 1] += c.coeff(i, j);
      row[static_cast<std::size_t>(j + k) - 1] -= c.coeff(j, k);
      if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return x.is_zero(); }))
        continue;
      rows.push_back(std::move(row));
    }
  int rank = 0;
  for (int col = 0; col < vars; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
      if (!rows[r][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    const std::vector<Rational> prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      if (rows[r][static_cast<std::size_t>(col)].is_zero()) continue;
      const Rational f =
          rows[r][static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      for (int j = 0; j < vars; ++j)
        rows[r][static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  return vars - rank;
}

// Direct evaluation of every relation on a candidate tuple.
inline bool relations_accept(const CoeffMatrix& c, int n, const Cocycle& theta) {
  for (int i = 1; i <= n - 1; ++i)
    if (theta.value(i) != theta.value(n - i)) return false;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; i + j <= n - 1; ++j) {
      const int k = n - i - j;
      if (k < 1) continue;
      if (c.coeff(i, j) * theta.value(i + j) != c.coeff(j, k) * theta.value(j + k)) return false;
    }
  return true;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), sign(0, 1);
  Rational v(num(rng), num(rng));
  return sign(rng) ? v : -v;
}

inline Cocycle random_cocycle(const CocycleSpace& space, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(-3, 3);
  Cocycle out{space.n, std::vector<Rational>(static_cast<std::size_t>(space.n - 1))};
  for (const Cocycle& basis : space.basis) {
    const Rational coeff(coin(rng));
    for (std::size_t t = 0; t < out.theta.size(); ++t) out.theta[t] += coeff * basis.theta[t];
  }
  return out;
}

}  // namespace dgca::testing
