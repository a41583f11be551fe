#pragma once

#include <cstddef>
#include <functional>

namespace toric {

/// Worker count: TORIC_THREADS when set and positive, else hardware concurrency.
unsigned default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// The first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace toric
