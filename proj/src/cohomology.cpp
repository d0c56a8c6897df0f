#include "dgca/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dgca/errors.hpp"

namespace dgca {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

const char* component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::contractible: return "contractible";
    case ComponentKind::generic_vanishing: return "generic_vanishing";
    case ComponentKind::generic_nonvanishing: return "generic_nonvanishing";
  }
  return "unknown";
}

const ComponentInfo& GradedGraph::component_of(int vertex) const {
  for (const ComponentInfo& comp : components)
    if (std::binary_search(comp.vertices.begin(), comp.vertices.end(), vertex)) return comp;
  fail(Err::IndexOutOfRange, "vertex outside [1,n-1]");
}

std::size_t GradedGraph::generic_count() const {
  std::size_t u = 0;
  for (const ComponentInfo& comp : components)
    if (comp.kind != ComponentKind::contractible) ++u;
  return u;
}

std::size_t GradedGraph::nonvanishing_count() const {
  std::size_t v = 0;
  for (const ComponentInfo& comp : components)
    if (comp.kind == ComponentKind::generic_nonvanishing) ++v;
  return v;
}

GradedGraph build_graph(const CoeffMatrix& c, int n) {
  if (n != c.dim() + 1) fail(Err::DimMismatch, "extension dimension must be dim + 1");
  GradedGraph g;
  g.n = n;
  const int verts = n - 1;
  if (verts < 1) fail(Err::BadInput, "extension dimension must be at least 2");
  UnionFind uf(verts + 1);

  for (int p = 1; 2 * p < n; ++p) {
    GraphEdge e;
    e.p = p;
    e.q = n - p;
    e.equal = true;
    g.edges.push_back(e);
    uf.unite(p, n - p);
  }

  std::set<int> forced;
  // Triples i+j+k = n; (i,j,k) and (k,j,i) carry the same relation.
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; i + j <= n - 1; ++j) {
      const int k = n - i - j;
      if (k < i) continue;
      const Rational cij = c.coeff(i, j);
      const Rational cjk = c.coeff(j, k);
      if (!cij.is_zero() && !cjk.is_zero()) {
        if (i == k) continue;  // theta_p relates to itself with equal factors
        GraphEdge e;
        e.p = i + j;
        e.q = j + k;
        e.left = cij;
        e.right = cjk;
        e.i = i;
        e.j = j;
        e.k = k;
        g.edges.push_back(e);
        uf.unite(e.p, e.q);
      } else if (!cij.is_zero()) {
        forced.insert(i + j);  // c_{ij} theta_{i+j} = 0
      } else if (!cjk.is_zero()) {
        forced.insert(j + k);
      }
    }
  g.forced_zero.assign(forced.begin(), forced.end());

  std::map<int, std::vector<int>> groups;  // root -> vertices
  for (int v = 1; v <= verts; ++v) groups[uf.find(v)].push_back(v);

  std::vector<ComponentInfo> comps;
  for (auto& [root, vertices] : groups) {
    ComponentInfo comp;
    std::sort(vertices.begin(), vertices.end());
    comp.vertices = vertices;
    comp.base_vertex = vertices.front();
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const ComponentInfo& a, const ComponentInfo& b) {
              return a.base_vertex < b.base_vertex;
            });

  for (ComponentInfo& comp : comps) {
    const bool killed = std::any_of(comp.vertices.begin(), comp.vertices.end(), [&](int v) {
      return forced.count(v) != 0;
    });
    if (killed) {
      comp.kind = ComponentKind::contractible;
      continue;
    }
    // Propagate theta_v / theta_base along a spanning tree, then verify every
    // edge; an inconsistent circuit forces the whole component to zero.
    std::map<int, Rational> ratio;
    ratio[comp.base_vertex] = Rational(1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const GraphEdge& e : g.edges) {
        const bool has_p = ratio.count(e.p) != 0;
        const bool has_q = ratio.count(e.q) != 0;
        if (has_p == has_q) continue;
        if (e.equal) {
          if (has_p)
            ratio[e.q] = ratio[e.p];
          else
            ratio[e.p] = ratio[e.q];
        } else {
          // c_{ij} theta_p = c_{jk} theta_q
          if (has_p)
            ratio[e.q] = ratio[e.p] * e.left / e.right;
          else
            ratio[e.p] = ratio[e.q] * e.right / e.left;
        }
        grew = true;
      }
    }
    bool consistent = true;
    for (const GraphEdge& e : g.edges) {
      if (!ratio.count(e.p) || !ratio.count(e.q)) continue;
      const bool ok = e.equal ? ratio[e.p] == ratio[e.q]
                              : e.left * ratio[e.p] == e.right * ratio[e.q];
      if (!ok) {
        consistent = false;
        break;
      }
    }
    if (!consistent) {
      comp.kind = ComponentKind::generic_vanishing;
      continue;
    }
    comp.kind = ComponentKind::generic_nonvanishing;
    comp.ratio_to_base = std::move(ratio);
  }
  g.components = std::move(comps);
  return g;
}

CocycleSpace cocycle_space(const CoeffMatrix& c, int n) {
  const GradedGraph g = build_graph(c, n);
  CocycleSpace space;
  space.n = n;
  space.u_of_c = static_cast<int>(g.generic_count());
  for (const ComponentInfo& comp : g.components) {
    if (comp.kind != ComponentKind::generic_nonvanishing) continue;
    Cocycle theta{n, std::vector<Rational>(static_cast<std::size_t>(n - 1))};
    for (const auto& [v, r] : comp.ratio_to_base)
      theta.theta[static_cast<std::size_t>(v) - 1] = r;
    space.basis.push_back(std::move(theta));
  }
  space.dim = static_cast<int>(space.basis.size());
  return space;
}

bool is_cocycle(const CoeffMatrix& c, int n, const Cocycle& theta) {
  if (n != c.dim() + 1) fail(Err::DimMismatch, "extension dimension must be dim + 1");
  if (theta.n != n || theta.theta.size() != static_cast<std::size_t>(n - 1))
    fail(Err::BadInput, "cocycle shape mismatch");
  for (int i = 1; i <= n - 1; ++i)
    if (theta.value(i) != theta.value(n - i)) return false;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; i + j <= n - 1; ++j) {
      const int k = n - i - j;
      if (k < i) continue;
      if (c.coeff(i, j) * theta.value(i + j) != c.coeff(j, k) * theta.value(j + k)) return false;
    }
  return true;
}

CoeffMatrix extend(const CoeffMatrix& c, const Cocycle& theta) {
  const int n = c.dim() + 1;
  if (theta.n != n || theta.theta.size() != static_cast<std::size_t>(n - 1))
    fail(Err::DimMismatch, "cocycle is not for extensions of this matrix");
  if (!is_cocycle(c, n, theta)) fail(Err::NotACocycle, "antidiagonal data violates the relations");
  std::vector<CoeffMatrix::RawEntry> raw;
  for (const auto& [pos, value] : c.entries()) raw.emplace_back(pos.i, pos.j, value);
  for (int i = 1; 2 * i <= n; ++i)
    if (!theta.value(i).is_zero()) raw.emplace_back(i, n - i, theta.value(i));
  return CoeffMatrix::validate(n, raw);
}

}  // namespace dgca
