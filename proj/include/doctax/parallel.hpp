#ifndef DOCTAX_PARALLEL_HPP
#define DOCTAX_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace doctax {

// Thread cap from DOCTAX_THREADS (0 or unset = hardware concurrency).
std::size_t max_threads();

// Runs fn(i) for i in [0,n). Results must be written to pre-sized,
// index-disjoint slots so the merge order is deterministic regardless of
// thread count. Falls back to a plain loop when n is small or 1 thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace doctax

#endif
