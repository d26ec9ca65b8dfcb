#include "twirlc/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace twirlc {

std::size_t worker_count() {
  static const std::size_t cached = [] {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("TWIRLC_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && static_cast<std::size_t>(v) < n) n = static_cast<std::size_t>(v);
    }
    return n;
  }();
  return cached;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = worker_count();
  if (workers <= 1 || n < 256) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = 64;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t lo = next.fetch_add(chunk);
        if (lo >= n) return;
        const std::size_t hi = lo + chunk < n ? lo + chunk : n;
        for (std::size_t i = lo; i < hi; ++i) body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace twirlc
