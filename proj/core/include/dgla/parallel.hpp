#pragma once

#include <cstddef>
#include <functional>

namespace dgla {

// Worker cap for embarrassingly parallel per-degree loops. Defaults to the
// DGLA_THREADS environment variable, or 1 when unset. Results are merged in
// index order, so the outcome is identical at every parallelism level.
int thread_cap();
void set_thread_cap(int n);

// Runs fn(i) for i in [0, n). fn must only write to its own slot of any
// shared output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace dgla
