#pragma once

#include <vector>

#include "ouk/exact.hpp"
#include "ouk/multi_index.hpp"

namespace ouk {

/// Triangular table of Stirling numbers of the second kind S(N, n): the number
/// of partitions of an N-element set into n non-empty blocks.
///
/// Built from S(0,0) = 1 and the recursion
///
///     S(N, n) = n * S(N-1, n) + S(N-1, n-1),
///
/// where the multiplier is the block count n (a misprint sometimes replaces it
/// with N); the brute-force partition counts in the test suite pin this down.
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);

  int n_max() const { return n_max_; }

  /// S(N, n) for 0 <= n <= N <= n_max(); out-of-triangle n > N returns 0.
  const Int& operator()(int N, int n) const;

 private:
  int n_max_;
  std::vector<std::vector<Int>> rows_;
  Int zero_;
};

/// S(N, n); n > N yields 0.  Memoized through a shared immutable table that is
/// grown (single writer) when a larger N is first requested.
Int stirling2(int N, int n);

/// Falling factorial (j)_n = j (j-1) ... (j-n+1); equals 0 when n > j and 1
/// when n = 0.
Int falling_factorial(int j, int n);

/// N! / (n_1! ... n_d!).  Requires |parts| = N.
Int multinomial(int N, const MultiIndex& parts);

/// All d-tuples of non-negative integers summing to total, in ascending
/// lexicographic order; the count is binomial(total + parts - 1, parts - 1).
std::vector<MultiIndex> compositions(int total, int parts);

/// Exact verification of j^N = sum_n S(N, n) (j)_n for all 0 <= N <= n_max,
/// 0 <= j <= j_max.
bool check_stirling_generating(int n_max, int j_max);

}  // namespace ouk
