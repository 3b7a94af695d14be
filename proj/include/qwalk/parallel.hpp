#pragma once

#include <cstddef>
#include <functional>

namespace qwalk::detail {

// Runs fn(i) for i in [0, n) on up to `jobs` threads.  fn must be safe to
// call concurrently for distinct i; the first exception thrown is rethrown
// on the calling thread after all workers join.
void parallel_for_index(std::size_t n, int jobs,
                        const std::function<void(std::size_t)>& fn);

}  // namespace qwalk::detail
