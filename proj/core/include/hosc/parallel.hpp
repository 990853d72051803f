#pragma once

#include <cstddef>
#include <functional>

namespace hosc {

// Thread budget: HOSC_THREADS if set (clamped to >= 1), otherwise the
// hardware concurrency.
int max_threads();

// Runs body(i) for i in [begin, end) across up to max_threads() workers in
// contiguous blocks.  Each index must touch only its own output slots, so
// scheduling cannot change results.  Exceptions from workers are rethrown.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

} // namespace hosc
