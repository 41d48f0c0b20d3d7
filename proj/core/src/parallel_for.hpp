#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace cheb::detail {

// Runs fn(i) for i in [0, count) on up to max_threads threads, contiguous
// chunks per thread.  fn must only touch per-index state; results are
// deterministic because the index space, not the schedule, decides who
// computes what.
template <class Fn>
void parallel_for(std::size_t count, int max_threads, const Fn& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, max_threads > 0 ? max_threads : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) {
      break;
    }
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) {
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) {
    t.join();
  }
}

}  // namespace cheb::detail
