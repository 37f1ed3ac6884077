#pragma once

#include <functional>

#include "satlab/wide.hpp"

namespace satlab {

// Resolve a worker count: positive value wins, 0 falls back to the
// SATLAB_THREADS environment variable, then to the hardware concurrency.
int resolve_threads(int requested);

// Run fn(i) for every i in [0, n) on `threads` workers.  Indices are assigned
// round-robin, so per-index output slots are filled independently of
// scheduling and results merge deterministically.  The first exception thrown
// by any worker is rethrown on the calling thread.
void parallel_for_index(u64 n, int threads, const std::function<void(u64)>& fn);

}  // namespace satlab
