#include "dgca/json_io.hpp"

#include <fstream>
#include <sstream>

#include "dgca/errors.hpp"

namespace dgca {

Json matrix_to_json(const CoeffMatrix& c) {
  Json doc;
  doc["dim"] = c.dim();
  Json entries = Json::array();
  for (const auto& [pos, value] : c.entries())
    entries.push_back(Json{{"i", pos.i}, {"j", pos.j}, {"value", value.str()}});
  doc["entries"] = std::move(entries);
  return doc;
}

CoeffMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
    fail(Err::BadInput, "matrix document needs an integer \"dim\"");
  const int dim = doc["dim"].get<int>();
  std::vector<CoeffMatrix::RawEntry> raw;
  if (doc.contains("entries")) {
    if (!doc["entries"].is_array()) fail(Err::BadInput, "\"entries\" must be an array");
    for (const auto& e : doc["entries"]) {
      if (!e.contains("i") || !e.contains("j") || !e.contains("value"))
        fail(Err::BadInput, "entry needs \"i\", \"j\" and \"value\"");
      raw.emplace_back(e["i"].get<int>(), e["j"].get<int>(),
                       Rational::parse(e["value"].get<std::string>()));
    }
  }
  return CoeffMatrix::validate(dim, raw);
}

CoeffMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::BadInput, "cannot open " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(Err::BadInput, "invalid JSON in " + path + ": " + e.what());
  }
  return matrix_from_json(doc);
}

Json pattern_to_json(const SupportPattern& p) { return matrix_to_json(canonical_rep(p)); }

namespace {

Json int_vector_to_json(const std::vector<mpz_class>& v) {
  Json arr = Json::array();
  for (const mpz_class& x : v) arr.push_back(x.get_str());
  return arr;
}

Json pos_list_to_json(const std::vector<Pos>& v) {
  Json arr = Json::array();
  for (Pos p : v) arr.push_back(Json::array({p.i, p.j}));
  return arr;
}

}  // namespace

Json iso_to_json(const IsoDecision& d) {
  Json doc;
  doc["isomorphic"] = d.isomorphic;
  Json obs = Json::array();
  for (const IsoObstruction& ob : d.obstructions) {
    if (ob.pattern_mismatch) {
      obs.push_back(Json{{"kind", "pattern-mismatch"}});
    } else {
      obs.push_back(Json{{"kind", "character"},
                         {"kernel_vector", int_vector_to_json(ob.kernel_vector)},
                         {"monomial_value", ob.monomial_value.str()}});
    }
  }
  doc["obstructions"] = std::move(obs);
  if (d.witness) {
    Json w;
    w["positions"] = pos_list_to_json(d.witness->positions);
    Json rhs = Json::array();
    for (const Rational& r : d.witness->rhs) rhs.push_back(r.str());
    w["rhs"] = std::move(rhs);
    Json expo = Json::array();
    for (const auto& row : d.witness->exponents) {
      Json jrow = Json::array();
      for (const Rational& q : row) jrow.push_back(q.str());
      expo.push_back(std::move(jrow));
    }
    w["exponents"] = std::move(expo);
    doc["witness"] = std::move(w);
  }
  return doc;
}

Json rigidity_to_json(const RigidityReport& r) {
  Json doc;
  doc["dim"] = r.pattern.dim;
  doc["support"] = pos_list_to_json(r.pattern.support);
  doc["rigid"] = r.rigid;
  Json obs = Json::array();
  for (const auto& v : r.obstruction_monomials) obs.push_back(int_vector_to_json(v));
  doc["obstruction_monomials"] = std::move(obs);
  return doc;
}

Json aut_to_json(const AutDescription& a) {
  Json doc;
  doc["m"] = a.m;
  doc["n_of_c"] = a.n_of_c;
  doc["t_of_c"] = a.t_of_c;
  doc["dim_aut"] = a.dim_aut;
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.lattice.basis.rows; ++r)
    rows.push_back(int_vector_to_json(a.lattice.basis.row(r)));
  doc["lattice"] = std::move(rows);
  return doc;
}

Json graph_to_json(const GradedGraph& g) {
  Json doc;
  doc["n"] = g.n;
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges) {
    Json je{{"p", e.p}, {"q", e.q}};
    if (e.equal) {
      je["kind"] = "equal";
    } else {
      je["kind"] = "ratio";
      je["left"] = e.left.str();
      je["right"] = e.right.str();
      je["triple"] = Json::array({e.i, e.j, e.k});
    }
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  doc["forced_zero"] = g.forced_zero;
  Json comps = Json::array();
  for (const ComponentInfo& comp : g.components) {
    Json jc;
    jc["vertices"] = comp.vertices;
    jc["kind"] = component_kind_name(comp.kind);
    jc["base"] = comp.base_vertex;
    if (comp.kind == ComponentKind::generic_nonvanishing) {
      Json ratios;
      for (const auto& [v, r] : comp.ratio_to_base) ratios[std::to_string(v)] = r.str();
      jc["ratio_to_base"] = std::move(ratios);
    }
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);
  return doc;
}

Json cocycle_space_to_json(const CocycleSpace& s) {
  Json doc;
  doc["n"] = s.n;
  doc["dim"] = s.dim;
  doc["u_of_c"] = s.u_of_c;
  Json basis = Json::array();
  for (const Cocycle& theta : s.basis) {
    Json row = Json::array();
    for (const Rational& t : theta.theta) row.push_back(t.str());
    basis.push_back(std::move(row));
  }
  doc["basis"] = std::move(basis);
  return doc;
}

Json extension_report_to_json(const ExtensionClassReport& r) {
  Json doc;
  doc["n"] = r.n;
  Json rows = Json::array();
  for (const ExtensionClassRow& row : r.rows)
    rows.push_back(Json{{"components", row.components},
                        {"v", row.v},
                        {"orbit_dim", row.orbit_dim},
                        {"single_class_candidate", row.single_class_candidate}});
  doc["rows"] = std::move(rows);
  return doc;
}

std::string graph_to_dot(const GradedGraph& g) {
  std::ostringstream out;
  out << "graph cocycle_relations {\n";
  out << "  layout=neato;\n";
  for (const ComponentInfo& comp : g.components) {
    const bool dead = comp.kind == ComponentKind::contractible;
    for (int v : comp.vertices) {
      out << "  v" << v << " [label=\"" << v << "\"";
      if (dead) out << ", fontname=\"bold\", style=bold";
      out << "];\n";
    }
  }
  for (const GraphEdge& e : g.edges) {
    const bool dead = g.component_of(e.p).kind == ComponentKind::contractible;
    out << "  v" << e.p << " -- v" << e.q << " [";
    if (!e.equal) out << "label=\"" << e.left.str() << ":" << e.right.str() << "\", ";
    out << "style=" << (dead ? "dashed" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dgca
