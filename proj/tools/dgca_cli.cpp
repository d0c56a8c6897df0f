#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dgca/cohomology.hpp"
#include "dgca/enumeration.hpp"
#include "dgca/errors.hpp"
#include "dgca/isomorphism.hpp"
#include "dgca/json_io.hpp"
#include "dgca/orbits.hpp"
#include "dgca/verify.hpp"

namespace {

using dgca::Json;

int resolve_jobs(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("DGCA_JOBS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 1;
}

dgca::Cocycle parse_theta(const std::string& text, int n) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    dgca::fail(dgca::Err::BadInput, std::string("theta must be a JSON array: ") + e.what());
  }
  if (!doc.is_array() || doc.size() != static_cast<std::size_t>(n - 1))
    dgca::fail(dgca::Err::BadInput,
               "theta needs " + std::to_string(n - 1) + " rational strings");
  dgca::Cocycle theta{n, {}};
  for (const auto& v : doc)
    theta.theta.push_back(dgca::Rational::parse(v.get<std::string>()));
  return theta;
}

Json analyze_report(const dgca::CoeffMatrix& c) {
  Json doc = dgca::matrix_to_json(c);
  Json degrees = Json::array();
  for (int k : dgca::generators(c)) degrees.push_back(k);
  doc["generators"] = std::move(degrees);
  doc["aut"] = dgca::aut_to_json(dgca::aut_description(c));
  const int n = c.dim() + 1;
  doc["graph"] = dgca::graph_to_json(dgca::build_graph(c, n));
  doc["cocycle_space"] = dgca::cocycle_space_to_json(dgca::cocycle_space(c, n));
  doc["unique_extension_class"] = dgca::unique_extension_class(c, n);
  doc["pattern_rigid"] = dgca::pattern_rigidity(dgca::support_pattern(c)).rigid;
  return doc;
}

int print_suite(const dgca::SuiteOutcome& outcome) {
  for (const dgca::SuiteItem& item : outcome.items)
    std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.name << ": " << item.detail << "\n";
  std::cout << "suite " << outcome.suite << ": " << (outcome.pass ? "PASS" : "FAIL") << std::endl;
  return outcome.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for diagonally graded commutative algebras"};
  app.require_subcommand(1);

  auto* cmd_enum = app.add_subcommand("enumerate", "stream all valid (0,1) patterns");
  int enum_dim = 0;
  bool count_only = false;
  int jobs_flag = 0;
  cmd_enum->add_option("-n,--dim", enum_dim, "matrix dimension")->required();
  cmd_enum->add_flag("--count-only", count_only, "print only the count");
  cmd_enum->add_option("--jobs", jobs_flag, "worker count (env DGCA_JOBS)");

  auto* cmd_analyze = app.add_subcommand("analyze", "validate a matrix and summarize it");
  std::string analyze_in;
  cmd_analyze->add_option("--in", analyze_in, "matrix JSON file")->required();

  auto* cmd_graph = app.add_subcommand("graph", "cocycle relation graph of a matrix");
  std::string graph_in, graph_format = "json";
  cmd_graph->add_option("--in", graph_in, "matrix JSON file")->required();
  cmd_graph->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* cmd_iso = app.add_subcommand("iso", "decide graded isomorphism");
  std::string iso_a, iso_b;
  bool iso_witness = false;
  cmd_iso->add_option("--a", iso_a, "first matrix JSON file")->required();
  cmd_iso->add_option("--b", iso_b, "second matrix JSON file")->required();
  cmd_iso->add_flag("--witness", iso_witness, "include the scaling witness");

  auto* cmd_rigid = app.add_subcommand("rigidity", "pattern rigidity reports");
  int rigid_dim = 0;
  std::string rigid_pattern;
  cmd_rigid->add_option("-n,--dim", rigid_dim, "sweep all patterns of this dimension");
  cmd_rigid->add_option("--pattern", rigid_pattern, "single matrix JSON file");
  cmd_rigid->add_option("--jobs", jobs_flag, "worker count (env DGCA_JOBS)");

  auto* cmd_aut = app.add_subcommand("aut", "automorphism torus description");
  std::string aut_in;
  cmd_aut->add_option("--in", aut_in, "matrix JSON file")->required();

  auto* cmd_extend = app.add_subcommand("extend", "central extension by a cocycle");
  std::string extend_in, extend_theta;
  cmd_extend->add_option("--in", extend_in, "matrix JSON file")->required();
  cmd_extend->add_option("--theta", extend_theta, "JSON array of rational strings")->required();

  auto* cmd_classes = app.add_subcommand("extend-classes", "extension class analysis");
  std::string classes_in;
  std::size_t classes_cap = SIZE_MAX;
  cmd_classes->add_option("--in", classes_in, "matrix JSON file")->required();
  cmd_classes->add_option("--max-subset", classes_cap, "cap on component subset size");

  auto* cmd_unique = app.add_subcommand("unique-class", "single extension class test");
  std::string unique_in;
  cmd_unique->add_option("--in", unique_in, "matrix JSON file")->required();

  auto* cmd_verify = app.add_subcommand("verify", "reference verification suites");
  std::string suite;
  int max_dim = 0;
  std::string fixture = "data/low_dim_tables.json";
  cmd_verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(dgca::suite_names()));
  cmd_verify->add_option("--max-dim", max_dim, "largest dimension to sweep");
  cmd_verify->add_option("--fixture", fixture, "fixture file for tables5");
  cmd_verify->add_option("--jobs", jobs_flag, "worker count (env DGCA_JOBS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const int jobs = resolve_jobs(jobs_flag);
  try {
    if (cmd_enum->parsed()) {
      if (count_only) {
        std::cout << dgca::count_patterns(enum_dim, jobs) << std::endl;
      } else {
        dgca::enumerate_patterns(
            enum_dim,
            [](const dgca::SupportPattern& p) {
              std::cout << dgca::pattern_to_json(p).dump() << "\n";
            },
            jobs);
        std::cout.flush();
      }
    } else if (cmd_analyze->parsed()) {
      std::cout << analyze_report(dgca::load_matrix_file(analyze_in)).dump(2) << std::endl;
    } else if (cmd_graph->parsed()) {
      const dgca::CoeffMatrix c = dgca::load_matrix_file(graph_in);
      const dgca::GradedGraph g = dgca::build_graph(c, c.dim() + 1);
      if (graph_format == "dot")
        std::cout << dgca::graph_to_dot(g);
      else
        std::cout << dgca::graph_to_json(g).dump(2) << std::endl;
    } else if (cmd_iso->parsed()) {
      const dgca::CoeffMatrix a = dgca::load_matrix_file(iso_a);
      const dgca::CoeffMatrix b = dgca::load_matrix_file(iso_b);
      std::cout << dgca::iso_to_json(dgca::are_isomorphic(a, b, iso_witness)).dump(2)
                << std::endl;
    } else if (cmd_rigid->parsed()) {
      if (!rigid_pattern.empty()) {
        const dgca::CoeffMatrix c = dgca::load_matrix_file(rigid_pattern);
        const auto report = dgca::pattern_rigidity(dgca::support_pattern(c));
        std::cout << dgca::rigidity_to_json(report).dump() << "\n";
      } else if (rigid_dim >= 1) {
        dgca::enumerate_patterns(
            rigid_dim,
            [](const dgca::SupportPattern& p) {
              std::cout << dgca::rigidity_to_json(dgca::pattern_rigidity(p)).dump() << "\n";
            },
            jobs);
      } else {
        dgca::fail(dgca::Err::BadInput, "rigidity needs -n or --pattern");
      }
      std::cout.flush();
    } else if (cmd_aut->parsed()) {
      std::cout << dgca::aut_to_json(dgca::aut_description(dgca::load_matrix_file(aut_in)))
                       .dump(2)
                << std::endl;
    } else if (cmd_extend->parsed()) {
      const dgca::CoeffMatrix c = dgca::load_matrix_file(extend_in);
      const dgca::Cocycle theta = parse_theta(extend_theta, c.dim() + 1);
      std::cout << dgca::matrix_to_json(dgca::extend(c, theta)).dump(2) << std::endl;
    } else if (cmd_classes->parsed()) {
      const dgca::CoeffMatrix c = dgca::load_matrix_file(classes_in);
      const auto report = dgca::extension_class_analysis(c, c.dim() + 1, classes_cap);
      std::cout << dgca::extension_report_to_json(report).dump(2) << std::endl;
    } else if (cmd_unique->parsed()) {
      const dgca::CoeffMatrix c = dgca::load_matrix_file(unique_in);
      std::cout << (dgca::unique_extension_class(c, c.dim() + 1) ? "true" : "false")
                << std::endl;
    } else if (cmd_verify->parsed()) {
      if (max_dim == 0) max_dim = suite == "counts" ? 10 : 9;
      return print_suite(dgca::run_suite(suite, max_dim, fixture, jobs));
    }
  } catch (const dgca::DomainError& e) {
    Json err{{"error", dgca::err_name(e.code())}, {"message", e.what()}};
    std::cerr << err.dump() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << std::endl;
    return 1;
  }
  return 0;
}
