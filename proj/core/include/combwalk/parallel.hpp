#pragma once

#include <cstdint>
#include <functional>

namespace combwalk {

/// Number of workers actually used for a request (0 means all hardware
/// threads).
int resolve_threads(int requested);

/// Runs body(i) for i in [0, count) on a static partition of the index
/// range. Bodies must write only to per-index slots; results are then
/// independent of the thread count, which is the reproducibility contract
/// of every experiment. Exceptions from workers are rethrown on the caller.
void parallel_for(std::int64_t count, int threads,
                  const std::function<void(std::int64_t)>& body);

}  // namespace combwalk
