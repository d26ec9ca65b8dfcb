#pragma once

#include <cstddef>
#include <functional>

namespace twirlc {

// Worker count: hardware concurrency capped by the TWIRLC_THREADS
// environment variable (1 disables threading).
std::size_t worker_count();

// Chunked parallel loop over [0, n).  Falls back to a plain loop when a
// single worker is configured or the range is tiny.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace twirlc
