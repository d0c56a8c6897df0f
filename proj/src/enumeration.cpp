#include "dgca/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "dgca/errors.hpp"

namespace dgca {

namespace {

struct Constraint {
  // Supports satisfy (a && b) == (c && d) for the four positions of an
  // associativity triple; indices into the level-ordered position list.
  std::uint64_t lhs_mask = 0, rhs_mask = 0;
  int last = 0;  // largest involved position index
};

struct SearchSpace {
  int n = 0;
  std::vector<Pos> positions;
  std::vector<std::vector<Constraint>> by_last;  // checked when `last` is assigned
  std::vector<Constraint> all;
};

SearchSpace build_space(int n) {
  SearchSpace s;
  s.n = n;
  s.positions = free_positions(n);
  if (s.positions.size() > 63) fail(Err::BadInput, "dimension too large for bitmask search");
  std::map<Pos, int, PosLevelLess> index;
  for (int t = 0; t < static_cast<int>(s.positions.size()); ++t) index[s.positions[t]] = t;

  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
  s.by_last.resize(s.positions.size());
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; i + j <= n - 1; ++j)
      for (int k = i; i + j + k <= n; ++k) {
        const int a = index.at(norm_pos(i, j));
        const int b = index.at(norm_pos(i + j, k));
        const int c = index.at(norm_pos(j, k));
        const int d = index.at(norm_pos(i, j + k));
        std::pair<int, int> lhs{std::min(a, b), std::max(a, b)};
        std::pair<int, int> rhs{std::min(c, d), std::max(c, d)};
        if (lhs > rhs) std::swap(lhs, rhs);
        if (lhs == rhs) continue;  // tautological
        if (!seen.insert({lhs, rhs}).second) continue;
        Constraint con;
        con.lhs_mask = (1ull << lhs.first) | (1ull << lhs.second);
        con.rhs_mask = (1ull << rhs.first) | (1ull << rhs.second);
        con.last = std::max(lhs.second, rhs.second);
        s.by_last[static_cast<std::size_t>(con.last)].push_back(con);
        s.all.push_back(con);
      }
  return s;
}

bool holds(const Constraint& con, std::uint64_t mask) {
  return ((mask & con.lhs_mask) == con.lhs_mask) == ((mask & con.rhs_mask) == con.rhs_mask);
}

bool consistent_at(const SearchSpace& s, std::uint64_t mask, int depth) {
  for (const Constraint& con : s.by_last[static_cast<std::size_t>(depth)])
    if (!holds(con, mask)) return false;
  return true;
}

void dfs(const SearchSpace& s, int depth, std::uint64_t mask,
         const std::function<void(std::uint64_t)>& emit) {
  if (depth == static_cast<int>(s.positions.size())) {
    emit(mask);
    return;
  }
  if (consistent_at(s, mask, depth)) dfs(s, depth + 1, mask, emit);
  const std::uint64_t with = mask | (1ull << depth);
  if (consistent_at(s, with, depth)) dfs(s, depth + 1, with, emit);
}

SupportPattern decode(const SearchSpace& s, std::uint64_t mask) {
  std::vector<Pos> supp;
  for (std::size_t t = 0; t < s.positions.size(); ++t)
    if (mask & (1ull << t)) supp.push_back(s.positions[t]);
  return SupportPattern{s.n, std::move(supp)};
}

int prefix_depth(const SearchSpace& s, int jobs) {
  int d = 0;
  while ((1 << d) < jobs && d < static_cast<int>(s.positions.size())) ++d;
  return d;
}

// Subtree index read most-significant-bit-first matches the sequential
// depth-first order, so concatenating subtree results reproduces it.
void run_subtrees(const SearchSpace& s, int jobs,
                  const std::function<void(int subtree, std::uint64_t mask)>& sink) {
  const int d = prefix_depth(s, jobs);
  const int subtrees = 1 << d;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int sub = next.fetch_add(1);
      if (sub >= subtrees) return;
      std::uint64_t mask = 0;
      bool alive = true;
      for (int t = 0; t < d && alive; ++t) {
        if ((sub >> (d - 1 - t)) & 1) mask |= 1ull << t;
        alive = consistent_at(s, mask, t);
      }
      if (!alive) continue;
      dfs(s, d, mask, [&](std::uint64_t m) { sink(sub, m); });
    }
  };
  if (jobs <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<Pos> free_positions(int n) {
  std::vector<Pos> out;
  for (int level = 2; level <= n; ++level)
    for (int i = 1; 2 * i <= level; ++i) out.push_back(Pos{i, level - i});
  return out;
}

void enumerate_patterns(int n, const std::function<void(const SupportPattern&)>& emit, int jobs) {
  if (n < 1) fail(Err::BadInput, "dimension must be positive");
  const SearchSpace s = build_space(n);
  if (jobs <= 1) {
    dfs(s, 0, 0, [&](std::uint64_t m) { emit(decode(s, m)); });
    return;
  }
  const int subtrees = 1 << prefix_depth(s, jobs);
  std::vector<std::vector<std::uint64_t>> slots(static_cast<std::size_t>(subtrees));
  run_subtrees(s, jobs, [&](int sub, std::uint64_t m) {
    slots[static_cast<std::size_t>(sub)].push_back(m);
  });
  for (const auto& slot : slots)
    for (std::uint64_t m : slot) emit(decode(s, m));
}

std::vector<SupportPattern> enumerate_patterns(int n, int jobs) {
  std::vector<SupportPattern> out;
  enumerate_patterns(n, [&](const SupportPattern& p) { out.push_back(p); }, jobs);
  return out;
}

std::uint64_t count_patterns(int n, int jobs) {
  if (n < 1) fail(Err::BadInput, "dimension must be positive");
  const SearchSpace s = build_space(n);
  if (jobs <= 1) {
    std::uint64_t count = 0;
    dfs(s, 0, 0, [&](std::uint64_t) { ++count; });
    return count;
  }
  const int subtrees = 1 << prefix_depth(s, jobs);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(subtrees), 0);
  run_subtrees(s, jobs, [&](int sub, std::uint64_t) { ++counts[static_cast<std::size_t>(sub)]; });
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

std::uint64_t count_patterns_naive(int n) {
  if (n < 1) fail(Err::BadInput, "dimension must be positive");
  if (n > 6) fail(Err::OracleTooLarge, "naive scan limited to n <= 6");
  const SearchSpace s = build_space(n);
  const std::uint64_t total = 1ull << s.positions.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const Constraint& con : s.all)
      if (!holds(con, mask)) {
        ok = false;
        break;
      }
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace dgca
