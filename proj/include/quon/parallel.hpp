#pragma once

#include <cstddef>
#include <functional>

namespace quon {

/// Worker count for parallel fills: QUON_THREADS if set, else hardware
/// concurrency. Results never depend on it; each index writes its own slot.
unsigned thread_count();

/// Runs fn(i) for i in [0, n) across thread_count() workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace quon
