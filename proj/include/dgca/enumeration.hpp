#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dgca/coeff_matrix.hpp"

namespace dgca {

/// Streams every support pattern of dimension n whose (0,1) matrix satisfies
/// the associativity law, each exactly once, in a deterministic total order:
/// positions are taken by antidiagonal level then by i, and membership is
/// decided depth-first with "absent" explored before "present". A partial
/// assignment is cut as soon as some fully determined associativity triple
/// fails. Workers split the first assignment decisions into disjoint
/// subtrees; the merged stream does not depend on jobs.
void enumerate_patterns(int n, const std::function<void(const SupportPattern&)>& emit,
                        int jobs = 1);

std::vector<SupportPattern> enumerate_patterns(int n, int jobs = 1);

std::uint64_t count_patterns(int n, int jobs = 1);

/// Full scan of all 2^k candidate supports; allowed only for n <= 6
/// (OracleTooLarge beyond).
std::uint64_t count_patterns_naive(int n);

/// The free positions {(i,j) : i <= j, i+j <= n} in level order.
std::vector<Pos> free_positions(int n);

}  // namespace dgca
