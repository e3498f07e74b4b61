#pragma once

#include <cstddef>
#include <functional>

namespace zk {

// Worker count from ZK_WORKERS (default: hardware concurrency, at least 1).
std::size_t worker_count();

// Runs fn(0..n−1) on up to worker_count() threads.  Indices are handed out
// dynamically; the first exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace zk
