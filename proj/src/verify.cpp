#include "dgca/verify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "dgca/cohomology.hpp"
#include "dgca/enumeration.hpp"
#include "dgca/errors.hpp"
#include "dgca/isomorphism.hpp"
#include "dgca/json_io.hpp"
#include "dgca/orbits.hpp"

namespace dgca {

namespace {

// The six-entry dimension-8 support whose pattern carries infinitely many
// isomorphism classes; the kernel character below is its obstruction.
SupportPattern six_entry_dim8_pattern() {
  return SupportPattern::from_positions(
      8, {Pos{2, 4}, Pos{3, 3}, Pos{2, 5}, Pos{3, 4}, Pos{3, 5}, Pos{4, 4}});
}

const std::vector<long> kDim8Character = {1, -1, -1, 1, 1, -1};

std::string pattern_key(const SupportPattern& p) {
  std::ostringstream key;
  for (Pos pos : p.support) key << pos.i << "," << pos.j << ";";
  return key.str();
}

SuiteItem counts_item(int n, int jobs) {
  SuiteItem item;
  item.name = "count n=" + std::to_string(n);
  const std::uint64_t got = count_patterns(n, jobs);
  const std::uint64_t want = kPatternCounts[static_cast<std::size_t>(n) - 1];
  item.pass = got == want;
  item.detail = "expected " + std::to_string(want) + ", got " + std::to_string(got);
  return item;
}

SuiteOutcome run_counts(int max_dim, int jobs) {
  SuiteOutcome out{"counts", true, {}};
  if (max_dim < 1 || max_dim > 10) fail(Err::BadInput, "counts supports max-dim 1..10");
  for (int n = 1; n <= max_dim; ++n) {
    out.items.push_back(counts_item(n, jobs));
    out.pass = out.pass && out.items.back().pass;
  }
  return out;
}

SuiteOutcome run_tables5(const std::string& fixture_path, int jobs) {
  SuiteOutcome out{"tables5", true, {}};
  std::ifstream in(fixture_path);
  if (!in) fail(Err::FixtureMissing, "fixture not found at " + fixture_path);
  Json fixture;
  try {
    in >> fixture;
  } catch (const std::exception& e) {
    fail(Err::FixtureMissing, std::string("fixture unreadable: ") + e.what());
  }
  std::map<int, std::set<std::string>> expected;
  for (const auto& doc : fixture.at("matrices")) {
    const CoeffMatrix m = matrix_from_json(doc);
    expected[m.dim()].insert(pattern_key(support_pattern(m)));
  }
  for (int n = 2; n <= 5; ++n) {
    SuiteItem item;
    item.name = "tables n=" + std::to_string(n);
    std::set<std::string> got;
    for (const SupportPattern& p : enumerate_patterns(n, jobs)) got.insert(pattern_key(p));
    item.pass = got == expected[n];
    item.detail = "fixture " + std::to_string(expected[n].size()) + " patterns, enumerated " +
                  std::to_string(got.size());
    out.items.push_back(std::move(item));
    out.pass = out.pass && out.items.back().pass;
  }
  return out;
}

SuiteOutcome run_rigidity7(int max_dim, int jobs) {
  SuiteOutcome out{"rigidity7", true, {}};
  const int top = std::min(max_dim, 7);
  for (int n = 1; n <= top; ++n) {
    SuiteItem item;
    item.name = "rigidity n=" + std::to_string(n);
    std::size_t total = 0, non_rigid = 0;
    for (const SupportPattern& p : enumerate_patterns(n, jobs)) {
      ++total;
      if (!pattern_rigidity(p).rigid) ++non_rigid;
    }
    item.pass = non_rigid == 0;
    item.detail = std::to_string(non_rigid) + " non-rigid of " + std::to_string(total);
    out.items.push_back(std::move(item));
    out.pass = out.pass && out.items.back().pass;
  }
  return out;
}

SuiteOutcome run_counterexample8(int jobs) {
  SuiteOutcome out{"counterexample8", true, {}};
  const SupportPattern target = six_entry_dim8_pattern();
  const std::string target_key = pattern_key(target);

  std::size_t non_rigid = 0;
  bool target_non_rigid = false;
  for (const SupportPattern& p : enumerate_patterns(8, jobs)) {
    const RigidityReport rep = pattern_rigidity(p);
    if (rep.rigid) continue;
    ++non_rigid;
    if (pattern_key(p) == target_key) target_non_rigid = true;
  }
  SuiteItem sweep;
  sweep.name = "non-rigid patterns at n=8";
  sweep.pass = non_rigid >= 1 && target_non_rigid;
  sweep.detail = std::to_string(non_rigid) + " non-rigid, six-entry pattern " +
                 (target_non_rigid ? "included" : "missing");
  out.items.push_back(std::move(sweep));

  SuiteItem character;
  character.name = "obstruction character";
  const RigidityReport rep = pattern_rigidity(target);
  bool match = !rep.rigid && rep.obstruction_monomials.size() == 1;
  if (match) {
    const auto& got = rep.obstruction_monomials.front();
    bool plus = true, minus = true;
    for (std::size_t e = 0; e < got.size(); ++e) {
      plus = plus && got[e] == kDim8Character[e];
      minus = minus && got[e] == -kDim8Character[e];
    }
    match = plus || minus;
  }
  character.pass = match;
  character.detail = match ? "single character (1,-1,-1,1,1,-1) up to sign"
                           : "unexpected kernel basis";
  out.items.push_back(std::move(character));

  SuiteItem classes;
  classes.name = "obstruction values 1,2,3 pairwise non-isomorphic";
  std::vector<CoeffMatrix> reps;
  for (long t : {1L, 2L, 3L}) {
    std::vector<CoeffMatrix::RawEntry> raw;
    for (Pos pos : target.support)
      raw.emplace_back(pos.i, pos.j, pos == Pos{3, 3} ? Rational(t) : Rational(1));
    reps.push_back(CoeffMatrix::validate(8, raw));
  }
  bool distinct = true;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      distinct = distinct && !are_isomorphic(reps[a], reps[b], false).isomorphic;
  classes.pass = distinct;
  classes.detail = distinct ? "three distinct classes on one pattern" : "collision";
  out.items.push_back(std::move(classes));

  for (const SuiteItem& item : out.items) out.pass = out.pass && item.pass;
  return out;
}

SuiteOutcome run_cohomology_sweep(int max_dim, int jobs) {
  SuiteOutcome out{"cohomology-sweep", true, {}};
  for (int m = 1; m <= max_dim; ++m) {
    const int n = m + 1;
    std::size_t patterns = 0, dim_bound = 0, vanishing = 0, orbit_bound = 0;
    for (const SupportPattern& p : enumerate_patterns(m, jobs)) {
      ++patterns;
      const CoeffMatrix rep = canonical_rep(p);
      const GradedGraph graph = build_graph(rep, n);
      const CocycleSpace space = cocycle_space(rep, n);
      if (space.dim > space.u_of_c) ++dim_bound;
      if (graph.nonvanishing_count() != graph.generic_count()) ++vanishing;
      for (const ExtensionClassRow& row : extension_class_analysis(rep, n).rows)
        if (row.orbit_dim > row.v - 1) ++orbit_bound;
    }
    SuiteItem item;
    item.name = "sweep matrix dim " + std::to_string(m);
    item.pass = dim_bound == 0 && vanishing == 0 && orbit_bound == 0;
    item.detail = std::to_string(patterns) + " patterns; dim<=u violations " +
                  std::to_string(dim_bound) + ", vanishing (0,1) components " +
                  std::to_string(vanishing) + ", orbit bound violations " +
                  std::to_string(orbit_bound);
    out.items.push_back(std::move(item));
    out.pass = out.pass && out.items.back().pass;
  }
  return out;
}

SuiteOutcome run_conjecture(int max_dim, int jobs) {
  SuiteOutcome out{"conjecture", true, {}};
  for (int m = 1; m <= max_dim; ++m) {
    const int n = m + 1;
    std::size_t patterns = 0;
    std::vector<std::string> counterexamples;
    for (const SupportPattern& p : enumerate_patterns(m, jobs)) {
      ++patterns;
      if (build_graph(canonical_rep(p), n).nonvanishing_count() == 0)
        counterexamples.push_back(pattern_to_json(p).dump());
    }
    SuiteItem item;
    item.name = "nonvanishing existence, matrix dim " + std::to_string(m);
    item.pass = counterexamples.empty();
    if (counterexamples.empty()) {
      item.detail = std::to_string(patterns) + " patterns, 0 counterexamples";
    } else {
      std::ostringstream detail;
      detail << counterexamples.size() << " counterexample(s):";
      for (const std::string& doc : counterexamples) detail << " " << doc;
      item.detail = detail.str();
    }
    out.items.push_back(std::move(item));
    out.pass = out.pass && out.items.back().pass;
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"counts", "tables5", "rigidity7", "counterexample8", "cohomology-sweep", "conjecture"};
}

SuiteOutcome run_suite(const std::string& suite, int max_dim, const std::string& fixture_path,
                       int jobs) {
  if (suite == "counts") return run_counts(max_dim, jobs);
  if (suite == "tables5") return run_tables5(fixture_path, jobs);
  if (suite == "rigidity7") return run_rigidity7(max_dim, jobs);
  if (suite == "counterexample8") return run_counterexample8(jobs);
  if (suite == "cohomology-sweep") return run_cohomology_sweep(max_dim, jobs);
  if (suite == "conjecture") return run_conjecture(max_dim, jobs);
  fail(Err::BadInput, "unknown suite " + suite);
}

}  // namespace dgca
