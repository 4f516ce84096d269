#pragma once

#include <cstddef>
#include <functional>

namespace berndt {

// Worker count: BERNDT_LAB_THREADS when set to a positive integer,
// otherwise the hardware concurrency.
int thread_cap();

// Runs body(0..n-1) on up to `threads` workers. Results must be written to
// per-index slots by the caller; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int threads = thread_cap());

}  // namespace berndt
