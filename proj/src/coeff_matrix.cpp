#include "dgca/coeff_matrix.hpp"

#include <algorithm>
#include <set>

#include "dgca/errors.hpp"

namespace dgca {

namespace {

void check_associativity(int dim, const EntryMap& entries) {
  const auto coeff = [&](int i, int j) -> Rational {
    if (i + j > dim) return Rational();
    const auto it = entries.find(norm_pos(i, j));
    return it == entries.end() ? Rational() : it->second;
  };
  // Triples with i+j+k > dim vanish on both sides by the storage convention.
  // (i,j,k) and (k,j,i) give the same identity, so k runs from i.
  for (int i = 1; i <= dim - 2; ++i)
    for (int j = 1; i + j <= dim - 1; ++j)
      for (int k = i; i + j + k <= dim; ++k) {
        const Rational lhs = coeff(j, k) * coeff(i, j + k);
        const Rational rhs = coeff(i, j) * coeff(i + j, k);
        if (lhs != rhs)
          throw AssociativityError(i, j, k,
                                   "associativity fails at triple (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k) + "): " +
                                       lhs.str() + " != " + rhs.str());
      }
}

}  // namespace

CoeffMatrix CoeffMatrix::validate(int dim, const std::vector<RawEntry>& raw) {
  if (dim < 1) fail(Err::BadInput, "dimension must be positive");
  EntryMap entries;
  for (const auto& [i, j, value] : raw) {
    if (i < 1 || i > dim || j < 1 || j > dim)
      fail(Err::IndexOutOfRange,
           "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1," +
               std::to_string(dim) + "]^2");
    if (value.is_zero())
      fail(Err::ZeroEntrySupplied,
           "zero value at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i + j > dim)
      fail(Err::SupportAboveAntidiagonal,
           "nonzero entry at (" + std::to_string(i) + "," + std::to_string(j) + ") with i+j > " +
               std::to_string(dim));
    const Pos p = norm_pos(i, j);
    const auto [it, inserted] = entries.emplace(p, value);
    if (!inserted && it->second != value)
      fail(Err::ConflictingEntry,
           "conflicting duplicates at (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  }
  check_associativity(dim, entries);
  return CoeffMatrix(dim, std::move(entries));
}

CoeffMatrix CoeffMatrix::zero(int dim) { return validate(dim, {}); }

Rational CoeffMatrix::coeff(int i, int j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_)
    fail(Err::IndexOutOfRange, "coeff index outside [1,dim]");
  if (i + j > dim_) return Rational();
  const auto it = entries_.find(norm_pos(i, j));
  return it == entries_.end() ? Rational() : it->second;
}

SupportPattern SupportPattern::from_positions(int dim, std::vector<Pos> positions) {
  if (dim < 1) fail(Err::InvalidPattern, "dimension must be positive");
  for (Pos& p : positions) {
    p = norm_pos(p.i, p.j);
    if (p.i < 1 || p.j > dim || p.i + p.j > dim)
      fail(Err::InvalidPattern,
           "position (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") invalid for dim " +
               std::to_string(dim));
  }
  std::sort(positions.begin(), positions.end(),
            [](Pos a, Pos b) { return PosLevelLess()(a, b); });
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return SupportPattern{dim, std::move(positions)};
}

BasisProduct multiply_basis(const CoeffMatrix& c, int i, int j) {
  if (i < 1 || i > c.dim() || j < 1 || j > c.dim())
    fail(Err::IndexOutOfRange, "basis degree outside [1,dim]");
  if (i + j > c.dim()) return BasisProduct{Rational(), std::nullopt};
  return BasisProduct{c.coeff(i, j), i + j};
}

GradedVector GradedVector::zero(int dim) {
  return GradedVector{dim, std::vector<Rational>(static_cast<std::size_t>(dim))};
}

GradedVector multiply(const CoeffMatrix& c, const GradedVector& x, const GradedVector& y) {
  const int n = c.dim();
  if (x.dim != n || y.dim != n || x.coords.size() != static_cast<std::size_t>(n) ||
      y.coords.size() != static_cast<std::size_t>(n))
    fail(Err::DimMismatch, "element dimensions vs algebra dimension");
  GradedVector z = GradedVector::zero(n);
  for (int i = 1; i <= n; ++i) {
    if (x.coords[static_cast<std::size_t>(i) - 1].is_zero()) continue;
    for (int j = 1; i + j <= n; ++j) {
      if (y.coords[static_cast<std::size_t>(j) - 1].is_zero()) continue;
      z.coords[static_cast<std::size_t>(i + j) - 1] +=
          x.coords[static_cast<std::size_t>(i) - 1] * y.coords[static_cast<std::size_t>(j) - 1] *
          c.coeff(i, j);
    }
  }
  return z;
}

bool Cocycle::is_zero() const {
  return std::all_of(theta.begin(), theta.end(), [](const Rational& t) { return t.is_zero(); });
}

std::pair<CoeffMatrix, Cocycle> truncate_decompose(const CoeffMatrix& c) {
  const int n = c.dim();
  if (n < 2) fail(Err::BadInput, "truncation needs dim >= 2");
  std::vector<CoeffMatrix::RawEntry> kept;
  Cocycle theta{n, std::vector<Rational>(static_cast<std::size_t>(n - 1))};
  for (const auto& [pos, value] : c.entries()) {
    if (pos.i + pos.j < n) {
      kept.emplace_back(pos.i, pos.j, value);
    } else {  // i + j == n
      theta.theta[static_cast<std::size_t>(pos.i) - 1] = value;
      theta.theta[static_cast<std::size_t>(pos.j) - 1] = value;
    }
  }
  return {CoeffMatrix::validate(n - 1, kept), std::move(theta)};
}

std::vector<int> generators(const CoeffMatrix& c) {
  std::set<int> products;
  for (const auto& [pos, value] : c.entries()) products.insert(pos.i + pos.j);
  std::vector<int> gen;
  for (int k = 1; k <= c.dim(); ++k)
    if (!products.count(k)) gen.push_back(k);
  return gen;
}

SupportPattern support_pattern(const CoeffMatrix& c) {
  std::vector<Pos> supp;
  supp.reserve(c.entries().size());
  for (const auto& [pos, value] : c.entries()) supp.push_back(pos);
  return SupportPattern{c.dim(), std::move(supp)};
}

CoeffMatrix canonical_rep(const SupportPattern& p) {
  std::vector<CoeffMatrix::RawEntry> raw;
  raw.reserve(p.support.size());
  for (Pos pos : p.support) raw.emplace_back(pos.i, pos.j, Rational(1));
  return CoeffMatrix::validate(p.dim, raw);
}

}  // namespace dgca
