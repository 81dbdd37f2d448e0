#pragma once

#include <functional>

namespace mnv {

// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = all cores).
// Tasks are claimed from an atomic counter; the first exception thrown by any
// task is rethrown on the calling thread after all workers join.
void parallel_for(long count, int threads, const std::function<void(long)>& fn);

int hardware_threads();

}  // namespace mnv
