#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dgca {

/// Reference count of valid (0,1) patterns per dimension 1..10.
inline constexpr std::array<std::uint64_t, 10> kPatternCounts = {1,   2,   4,   10,   22,
                                                                 78, 202, 804, 2824, 14294};

struct SuiteItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOutcome {
  std::string suite;
  bool pass = false;
  std::vector<SuiteItem> items;
};

std::vector<std::string> suite_names();

/// Runs one verification suite:
///   counts          — enumeration counts for n = 1..max_dim
///   tables5         — enumerated patterns for n = 2..5 against the fixture
///   rigidity7       — every pattern with n <= 7 is rigid
///   counterexample8 — the six-entry dimension-8 pattern is non-rigid with
///                     the expected obstruction character, and distinct
///                     obstruction values give pairwise non-isomorphic
///                     matrices
///   cohomology-sweep— cocycle-space and orbit bounds over all patterns
///   conjecture      — every pattern admits a nonvanishing component;
///                     counterexamples are reported verbatim
/// fixture_path is only read by tables5.
SuiteOutcome run_suite(const std::string& suite, int max_dim, const std::string& fixture_path,
                       int jobs);

}  // namespace dgca
