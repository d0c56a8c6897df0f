#include "dgca/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "dgca/errors.hpp"
#include "dgca/factored.hpp"

namespace dgca {

namespace {

// Exponent row of b_{i+j} / (b_i b_j) over n variables.
std::vector<mpz_class> iso_row(int n, Pos pos) {
  std::vector<mpz_class> row(static_cast<std::size_t>(n));
  row[static_cast<std::size_t>(pos.i + pos.j) - 1] += 1;
  row[static_cast<std::size_t>(pos.i) - 1] -= 1;
  row[static_cast<std::size_t>(pos.j) - 1] -= 1;
  return row;
}

IntMatrix iso_exponent_matrix(int n, const std::vector<Pos>& positions) {
  IntMatrix m(0, static_cast<std::size_t>(n));
  for (Pos pos : positions) m.append_row(iso_row(n, pos));
  return m;
}

RadicalValue witness_value(const RadicalWitness& w, int degree) {
  RadicalValue v = RadicalValue::one();
  const auto& expo = w.exponents[static_cast<std::size_t>(degree) - 1];
  for (std::size_t e = 0; e < w.rhs.size(); ++e) {
    if (expo[e].is_zero()) continue;
    v.mul_pow(w.rhs[e], expo[e]);
  }
  return v;
}

}  // namespace

IsoDecision are_isomorphic(const CoeffMatrix& a, const CoeffMatrix& b, bool with_witness) {
  if (a.dim() != b.dim()) fail(Err::DimMismatch, "matrices of different dimension");
  IsoDecision dec;
  if (support_pattern(a) != support_pattern(b)) {
    // Equal supports are forced by the isomorphism relation itself.
    dec.isomorphic = false;
    dec.obstructions.push_back(IsoObstruction{true, {}, Rational()});
    return dec;
  }

  const int n = a.dim();
  std::vector<Pos> positions;
  std::vector<Rational> rhs;
  for (const auto& [pos, value] : a.entries()) {
    positions.push_back(pos);
    rhs.push_back(b.coeff(pos.i, pos.j) / value);
  }
  const IntMatrix sys = iso_exponent_matrix(n, positions);
  const BinomialSolution sol = solve_binomial(sys, rhs);

  dec.isomorphic = sol.solvable;
  if (!sol.solvable) {
    for (const BinomialObstruction& ob : sol.obstructions)
      if (!ob.monomial_value.is_one())
        dec.obstructions.push_back(IsoObstruction{false, ob.kernel_vector, ob.monomial_value});
    return dec;
  }
  if (with_witness) {
    RadicalWitness w;
    w.dim = n;
    w.positions = positions;
    w.rhs = rhs;
    const RatMatrix& expo = *sol.witness_exponents;
    w.exponents.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& row = w.exponents[static_cast<std::size_t>(v)];
      row.resize(rhs.size());
      for (std::size_t e = 0; e < rhs.size(); ++e)
        row[e] = expo.at(static_cast<std::size_t>(v), e);
    }
    if (!verify_witness(a, b, w)) fail(Err::BadInput, "internal: witness failed verification");
    dec.witness = std::move(w);
  }
  return dec;
}

bool verify_witness(const CoeffMatrix& a, const CoeffMatrix& b, const RadicalWitness& w) {
  if (a.dim() != b.dim()) fail(Err::DimMismatch, "matrices of different dimension");
  const SupportPattern common = support_pattern(a);
  if (common != support_pattern(b)) fail(Err::MalformedWitness, "witness across unequal supports");
  if (w.dim != a.dim() || w.positions != common.support || w.rhs.size() != w.positions.size() ||
      w.exponents.size() != static_cast<std::size_t>(w.dim))
    fail(Err::MalformedWitness, "witness shape mismatch");
  for (const auto& row : w.exponents)
    if (row.size() != w.rhs.size()) fail(Err::MalformedWitness, "witness shape mismatch");

  for (std::size_t e = 0; e < w.positions.size(); ++e) {
    const Pos pos = w.positions[e];
    // b_{i+j} c_{ij} = b_i b_j c'_{ij} as formal radical products.
    RadicalValue lhs = witness_value(w, pos.i + pos.j);
    lhs.mul_pow(a.coeff(pos.i, pos.j), Rational(1));
    RadicalValue rhs = witness_value(w, pos.i);
    rhs.mul(witness_value(w, pos.j));
    rhs.mul_pow(b.coeff(pos.i, pos.j), Rational(1));
    if (!lhs.equals(rhs)) return false;
  }
  return true;
}

IntMatrix associativity_lattice(const SupportPattern& p) {
  const int n = p.dim;
  std::map<Pos, std::size_t, PosLevelLess> index;
  for (std::size_t t = 0; t < p.support.size(); ++t) index[p.support[t]] = t;
  const auto has = [&](int i, int j) { return index.count(norm_pos(i, j)) != 0; };

  IntMatrix lat(0, p.support.size());
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; i + j <= n - 1; ++j)
      for (int k = i; i + j + k <= n; ++k) {
        if (!has(i, j) || !has(i + j, k) || !has(j, k) || !has(i, j + k)) continue;
        // c_{jk} c_{i,j+k} / (c_{ij} c_{i+j,k}) = 1 in exponent form.
        std::vector<mpz_class> row(p.support.size());
        row[index.at(norm_pos(j, k))] += 1;
        row[index.at(norm_pos(i, j + k))] += 1;
        row[index.at(norm_pos(i, j))] -= 1;
        row[index.at(norm_pos(i + j, k))] -= 1;
        if (std::all_of(row.begin(), row.end(), [](const mpz_class& x) { return x == 0; }))
          continue;
        lat.append_row(row);
      }
  return lat;
}

RigidityReport pattern_rigidity(const SupportPattern& p) {
  try {
    canonical_rep(p);
  } catch (const DomainError& e) {
    fail(Err::InvalidPattern, e.what());
  }

  RigidityReport report;
  report.pattern = p;
  const IntMatrix sys = iso_exponent_matrix(p.dim, p.support);
  const IntMatrix kernel = left_kernel_basis(sys);
  const IntegerLattice assoc{p.support.size(), associativity_lattice(p)};
  report.rigid = true;
  for (std::size_t r = 0; r < kernel.rows; ++r) {
    const auto row = kernel.row(r);
    if (!in_rational_span(row, assoc)) {
      report.rigid = false;
      report.obstruction_monomials.push_back(row);
    }
  }
  return report;
}

CoeffMatrix random_valid_filling(const SupportPattern& p, std::mt19937_64& rng) {
  canonical_rep(p);  // rejects invalid patterns up front
  const IntMatrix assoc = associativity_lattice(p);
  // Rows of the orthogonal complement parameterize the coefficient torus:
  // c_e = prod_t s_t^{K_{t,e}} satisfies every associativity relation.
  const IntMatrix param = left_kernel_basis(assoc.transposed());
  std::uniform_int_distribution<int> small(1, 9);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Rational> params(param.rows);
  for (std::size_t t = 0; t < param.rows; ++t) {
    Rational v(small(rng), small(rng));
    if (coin(rng)) v = v.reciprocal();
    params[t] = v;
  }
  std::vector<CoeffMatrix::RawEntry> raw;
  for (std::size_t e = 0; e < p.support.size(); ++e) {
    Rational value(1);
    for (std::size_t t = 0; t < param.rows; ++t) {
      const mpz_class& k = param.at(t, e);
      if (k == 0) continue;
      value *= params[t].pow(k.get_si());
    }
    raw.emplace_back(p.support[e].i, p.support[e].j, value);
  }
  return CoeffMatrix::validate(p.dim, raw);
}

CoeffMatrix rescale_by_tuple(const CoeffMatrix& c, const std::vector<Rational>& b) {
  if (b.size() != static_cast<std::size_t>(c.dim()))
    fail(Err::DimMismatch, "tuple length vs dimension");
  for (const Rational& x : b)
    if (x.is_zero()) fail(Err::BadInput, "scaling tuple entries must be nonzero");
  std::vector<CoeffMatrix::RawEntry> raw;
  for (const auto& [pos, value] : c.entries()) {
    const Rational scaled = b[static_cast<std::size_t>(pos.i + pos.j) - 1] * value /
                            (b[static_cast<std::size_t>(pos.i) - 1] *
                             b[static_cast<std::size_t>(pos.j) - 1]);
    raw.emplace_back(pos.i, pos.j, scaled);
  }
  return CoeffMatrix::validate(c.dim(), raw);
}

}  // namespace dgca
