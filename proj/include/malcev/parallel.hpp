#ifndef MALCEV_PARALLEL_HPP
#define MALCEV_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace malcev {

/// Runs fn over [0, total) in contiguous chunks, one thread per chunk.
/// Callers keep determinism by writing only to per-index slots.
inline void parallel_for(std::uint64_t total, bool parallel,
                         const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  unsigned hw = parallel ? std::thread::hardware_concurrency() : 1;
  if (hw <= 1 || total < 2 * hw) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + hw - 1) / hw;
  for (unsigned t = 0; t < hw; ++t) {
    const std::uint64_t lo = t * chunk;
    if (lo >= total) break;
    const std::uint64_t hi = std::min(total, lo + chunk);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace malcev

#endif
