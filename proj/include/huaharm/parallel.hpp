#pragma once

#include <cstddef>
#include <functional>

namespace huaharm {

// Worker count from HUAHARM_THREADS, else the hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, count) on worker_count() threads; the first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace huaharm
