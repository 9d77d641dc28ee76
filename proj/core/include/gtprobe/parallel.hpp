#pragma once

#include <cstddef>
#include <functional>

namespace gtprobe {

/// Worker count: hardware concurrency, capped by the GT_THREADS environment
/// variable when it is set to a positive integer.
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Results must be written to per-index
/// slots; the first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace gtprobe
