#pragma once

#include <functional>

namespace spincgeom {

// Worker-thread cap: `requested` if positive, otherwise the value of the
// SPINC_GEOM_THREADS environment variable, otherwise a hardware default.
int resolve_threads(int requested);

// Run fn(i) for i in [0, n) on up to `threads` workers; blocks until done.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace spincgeom
