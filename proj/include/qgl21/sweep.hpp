#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace qgl21 {

/// One random parameter point for sweeps: (p,q) uniform in (0.5, 2.0)^2 with
/// the degenerate band |pq - 1| <= 0.05 rejected. Bit-reproducible for a
/// given (seed, cell) on any platform (no distribution objects).
struct PqDraw {
  double p, q;
};

inline PqDraw draw_pq(std::uint64_t seed, std::uint64_t cell) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (cell + 1)));
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (;;) {
    double p = 0.5 + 1.5 * unit();
    double q = 0.5 + 1.5 * unit();
    if (std::abs(p * q - 1.0) > 0.05) return {p, q};
  }
}

/// Runs fn(i) for i in [0, n) on all hardware threads. Work items must be
/// independent; callers keep results indexed so output order stays
/// deterministic.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers < 2 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace qgl21
