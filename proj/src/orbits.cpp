#include "dgca/orbits.hpp"

#include <algorithm>
#include <bit>

#include "dgca/errors.hpp"

namespace dgca {

namespace {

IntMatrix aut_lattice_rows(const CoeffMatrix& c) {
  const std::size_t m = static_cast<std::size_t>(c.dim());
  IntMatrix lat(0, m);
  for (const auto& [pos, value] : c.entries()) {
    std::vector<mpz_class> row(m);
    row[static_cast<std::size_t>(pos.i + pos.j) - 1] += 1;
    row[static_cast<std::size_t>(pos.i) - 1] -= 1;
    row[static_cast<std::size_t>(pos.j) - 1] -= 1;
    lat.append_row(row);
  }
  return lat;
}

// (e_i + e_{n-i}) - (e_j + e_{n-j}) over m = n-1 variables.
std::vector<mpz_class> pair_difference_row(int n, int i, int j) {
  std::vector<mpz_class> row(static_cast<std::size_t>(n - 1));
  row[static_cast<std::size_t>(i) - 1] += 1;
  row[static_cast<std::size_t>(n - i) - 1] += 1;
  row[static_cast<std::size_t>(j) - 1] -= 1;
  row[static_cast<std::size_t>(n - j) - 1] -= 1;
  return row;
}

std::vector<int> cocycle_support(const Cocycle& theta) {
  std::vector<int> supp;
  for (int i = 1; i <= theta.n - 1; ++i)
    if (!theta.value(i).is_zero()) supp.push_back(i);
  return supp;
}

void require_cocycle(const CoeffMatrix& c, const Cocycle& theta) {
  if (!is_cocycle(c, c.dim() + 1, theta)) fail(Err::NotACocycle, "not a graded 2-cocycle");
}

}  // namespace

AutDescription aut_description(const CoeffMatrix& c) {
  AutDescription d;
  d.m = c.dim();
  IntMatrix rows = aut_lattice_rows(c);
  const std::size_t rank = rank_of(rows);
  d.lattice = IntegerLattice{static_cast<std::size_t>(d.m), std::move(rows)};
  d.n_of_c = static_cast<int>(c.entries().size());
  d.dim_aut = d.m - static_cast<int>(rank);
  d.t_of_c = d.n_of_c - static_cast<int>(rank);
  return d;
}

Cocycle act_cocycle(const CoeffMatrix& c, const Cocycle& theta, const std::vector<Rational>& b) {
  const int n = c.dim() + 1;
  require_cocycle(c, theta);
  if (b.size() != static_cast<std::size_t>(c.dim()))
    fail(Err::DimMismatch, "tuple length vs dimension");
  for (const Rational& x : b)
    if (x.is_zero()) fail(Err::NotAnAutomorphism, "automorphism entries must be nonzero");
  for (const auto& [pos, value] : c.entries()) {
    const Rational lhs = b[static_cast<std::size_t>(pos.i + pos.j) - 1];
    const Rational rhs = b[static_cast<std::size_t>(pos.i) - 1] *
                         b[static_cast<std::size_t>(pos.j) - 1];
    if (lhs != rhs)
      fail(Err::NotAnAutomorphism,
           "b_{i+j} = b_i b_j fails at (" + std::to_string(pos.i) + "," + std::to_string(pos.j) +
               ")");
  }
  Cocycle out{n, std::vector<Rational>(static_cast<std::size_t>(n - 1))};
  for (int i = 1; i <= n - 1; ++i)
    out.theta[static_cast<std::size_t>(i) - 1] =
        b[static_cast<std::size_t>(i) - 1] * b[static_cast<std::size_t>(n - i) - 1] *
        theta.value(i);
  return out;
}

StabilizerInfo stabilizer_orbit(const CoeffMatrix& c, const Cocycle& theta) {
  const int n = c.dim() + 1;
  require_cocycle(c, theta);
  if (theta.is_zero()) fail(Err::ZeroCocycle, "stabilizer of the zero cocycle is everything");
  const AutDescription aut = aut_description(c);
  IntMatrix stab = aut.lattice.basis;
  const std::vector<int> supp = cocycle_support(theta);
  for (std::size_t a = 0; a < supp.size(); ++a)
    for (std::size_t b = a + 1; b < supp.size(); ++b)
      stab.append_row(pair_difference_row(n, supp[a], supp[b]));
  StabilizerInfo info;
  const std::size_t stab_rank = rank_of(stab);
  info.stab_lattice = IntegerLattice{static_cast<std::size_t>(aut.m), std::move(stab)};
  info.dim_stab = aut.m - static_cast<int>(stab_rank);
  info.orbit_dim = aut.dim_aut - info.dim_stab;
  return info;
}

bool unique_extension_class(const CoeffMatrix& c, int n) {
  return build_graph(c, n).nonvanishing_count() == 1;
}

ExtensionClassReport extension_class_analysis(const CoeffMatrix& c, int n,
                                              std::size_t max_subset_size) {
  const CocycleSpace space = cocycle_space(c, n);
  const GradedGraph graph = build_graph(c, n);
  std::vector<int> bases;
  for (const ComponentInfo& comp : graph.components)
    if (comp.kind == ComponentKind::generic_nonvanishing) bases.push_back(comp.base_vertex);

  ExtensionClassReport report;
  report.n = n;
  const std::size_t u = space.basis.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << u); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size > max_subset_size) continue;
    Cocycle gamma{n, std::vector<Rational>(static_cast<std::size_t>(n - 1))};
    ExtensionClassRow row;
    for (std::size_t t = 0; t < u; ++t) {
      if (!(mask & (std::size_t{1} << t))) continue;
      row.components.push_back(bases[t]);
      for (int i = 1; i <= n - 1; ++i)
        gamma.theta[static_cast<std::size_t>(i) - 1] += space.basis[t].value(i);
    }
    row.v = static_cast<int>(size);
    row.orbit_dim = stabilizer_orbit(c, gamma).orbit_dim;
    row.single_class_candidate = row.orbit_dim == row.v - 1;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool lines_same_orbit(const CoeffMatrix& c, const Cocycle& theta, const Cocycle& gamma) {
  const int n = c.dim() + 1;
  require_cocycle(c, theta);
  require_cocycle(c, gamma);
  if (theta.is_zero() || gamma.is_zero()) fail(Err::ZeroCocycle, "lines need nonzero cocycles");
  const std::vector<int> supp = cocycle_support(theta);
  if (supp != cocycle_support(gamma)) return false;  // the action preserves supports

  const AutDescription aut = aut_description(c);
  IntMatrix sys = aut.lattice.basis;
  std::vector<Rational> rhs(sys.rows, Rational(1));
  const int t0 = supp.front();
  const Rational scale0 = gamma.value(t0) / theta.value(t0);
  for (std::size_t a = 1; a < supp.size(); ++a) {
    sys.append_row(pair_difference_row(n, supp[a], t0));
    rhs.push_back(gamma.value(supp[a]) / theta.value(supp[a]) / scale0);
  }
  return solve_binomial(sys, rhs).solvable;
}

}  // namespace dgca
