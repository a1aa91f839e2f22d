#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace amalgam {

// Worker count: AMALGAM_THREADS when set to a positive integer, otherwise
// (absent, "0", or unparsable) the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("AMALGAM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Split [0, count) into near-equal contiguous chunks, one per worker, and
// run fn(chunk_index, begin, end) on each. Results must be merged by chunk
// index so the outcome is independent of scheduling.
template <typename Fn>
inline void parallel_chunks(std::size_t count, Fn&& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), count ? count : 1));
  if (workers <= 1) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace amalgam
