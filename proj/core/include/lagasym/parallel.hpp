#pragma once

#include <cstddef>
#include <functional>

namespace lagasym {

// Worker count: hardware concurrency, capped by LAGASYM_THREADS when set.
unsigned worker_count();

// Calls body(i) for i in [0, count) on up to worker_count() threads. The
// first exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace lagasym
