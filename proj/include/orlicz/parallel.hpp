#ifndef ORLICZ_PARALLEL_HPP
#define ORLICZ_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace orlicz {

/// Worker count: hardware concurrency capped by ORLICZ_GREEDY_THREADS.
unsigned worker_count();

/// Runs body(i) for i in [0, n). Bodies must not share mutable state; results
/// are expected to be written to per-index slots so output is order-free.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace orlicz

#endif
