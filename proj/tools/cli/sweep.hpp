#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "pellcount/intmath.hpp"

namespace pellcount::cli {

struct GridPoint {
  std::uint32_t A;
  std::uint32_t p;
};

/// (A, p) pairs with p prime <= p_max and A in [A_min, A_max], in
/// lexicographic (A, p) order. odd_only drops even A and p = 2.
inline std::vector<GridPoint> make_grid(std::uint32_t p_max, std::uint32_t A_min, std::uint32_t A_max,
                                        bool odd_only) {
  std::vector<GridPoint> grid;
  const auto primes = small_primes(p_max);
  for (std::uint32_t A = A_min; A <= A_max; ++A) {
    if (odd_only && A % 2 == 0) continue;
    for (std::uint32_t p : primes) {
      if (odd_only && p == 2) continue;
      grid.push_back({A, p});
    }
  }
  return grid;
}

/// Applies fn to every grid point on `jobs` threads. The result vector is
/// index-aligned with the grid, so output order never depends on scheduling.
template <class Fn>
auto run_grid(const std::vector<GridPoint>& grid, unsigned jobs, Fn fn) {
  using R = decltype(fn(grid.front()));
  std::vector<R> results(grid.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) results[i] = fn(grid[i]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

}  // namespace pellcount::cli
