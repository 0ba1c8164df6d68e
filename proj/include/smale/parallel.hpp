#pragma once

#include <cstdint>
#include <functional>

namespace smale {

// Number of workers to use: `requested` if positive, otherwise the value
// of SMALE_THREADS, otherwise the hardware concurrency.
int resolve_threads(int requested);

// Runs fn(0 .. count-1) across up to `threads` workers. Indices are
// claimed from a shared counter; callers that need determinism must write
// results into per-index slots and reduce in index order afterwards.
// Exceptions escaping fn terminate; catch inside fn.
void parallel_for(std::int64_t count, int threads,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace smale
