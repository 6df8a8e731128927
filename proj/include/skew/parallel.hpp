#pragma once

// Minimal work sharing for embarrassingly parallel loops.

#include <cstddef>
#include <functional>

namespace skew {

/// Threads to use: $SKEW_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Calls body(i) for every i in [0, count), spread over thread_count()
/// workers. body must be safe to call concurrently for distinct i. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace skew
