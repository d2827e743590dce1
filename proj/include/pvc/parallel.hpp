#pragma once

#include <functional>

namespace pvc {

// Worker count from the PVC_THREADS environment variable, falling back to
// hardware concurrency. Always at least 1.
int default_thread_count();

// Runs fn(0) .. fn(n-1) on up to `threads` workers. Task order is
// unspecified; callers keep results deterministic by writing into per-task
// slots or combining through order-free reductions. The first exception
// thrown by a task is rethrown after all workers finish.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace pvc
