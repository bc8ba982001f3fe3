#include "ouk/combinatorics.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace ouk {

StirlingTable::StirlingTable(int n_max) : n_max_(n_max), zero_(0) {
  if (n_max < 0) throw std::invalid_argument("StirlingTable: n_max must be >= 0");
  rows_.resize(n_max + 1);
  rows_[0] = {Int(1)};
  for (int N = 1; N <= n_max; ++N) {
    rows_[N].assign(N + 1, Int(0));
    for (int n = 1; n <= N; ++n) {
      const Int& same_blocks = (n <= N - 1) ? rows_[N - 1][n] : zero_;
      rows_[N][n] = n * same_blocks + rows_[N - 1][n - 1];
    }
  }
}

const Int& StirlingTable::operator()(int N, int n) const {
  if (N < 0 || n < 0) throw std::invalid_argument("StirlingTable: indices must be >= 0");
  if (N > n_max_) throw std::out_of_range("StirlingTable: N exceeds n_max");
  if (n > N) return zero_;
  return rows_[N][n];
}

namespace {

std::shared_ptr<const StirlingTable> shared_table(int need) {
  static std::mutex mu;
  static std::shared_ptr<const StirlingTable> table;
  std::lock_guard<std::mutex> lock(mu);
  if (!table || table->n_max() < need) {
    int size = 32;
    while (size < need) size *= 2;
    table = std::make_shared<const StirlingTable>(size);
  }
  return table;
}

}  // namespace

Int stirling2(int N, int n) {
  if (N < 0 || n < 0) throw std::invalid_argument("stirling2: arguments must be >= 0");
  if (n > N) return 0;
  auto table = shared_table(N);
  return (*table)(N, n);
}

Int falling_factorial(int j, int n) {
  if (j < 0 || n < 0) throw std::invalid_argument("falling_factorial: arguments must be >= 0");
  Int r = 1;
  for (int i = 0; i < n; ++i) r *= j - i;
  return r;
}

Int multinomial(int N, const MultiIndex& parts) {
  if (parts.order() != N)
    throw std::invalid_argument("multinomial: parts must sum to N");
  Int r = factorial(N);
  for (int c : parts.components()) r /= factorial(c);
  return r;
}

std::vector<MultiIndex> compositions(int total, int parts) {
  if (total < 0) throw std::invalid_argument("compositions: total must be >= 0");
  if (parts < 1) throw std::invalid_argument("compositions: parts must be >= 1");
  std::vector<MultiIndex> out;
  std::vector<int> cur(parts, 0);
  // Ascending lexicographic order falls out of recursing on the first slot.
  auto emit = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      cur[pos] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  emit(emit, 0, total);
  return out;
}

bool check_stirling_generating(int n_max, int j_max) {
  if (n_max < 0 || j_max < 0) return false;
  for (int N = 0; N <= n_max; ++N) {
    for (int j = 0; j <= j_max; ++j) {
      Int rhs = 0;
      for (int n = 0; n <= N; ++n) rhs += stirling2(N, n) * falling_factorial(j, n);
      if (rhs != int_pow(Int(j), N)) return false;
    }
  }
  return true;
}

}  // namespace ouk
