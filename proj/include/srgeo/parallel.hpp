#ifndef SRGEO_PARALLEL_HPP
#define SRGEO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace srgeo {

/// Worker count: SRGEO_THREADS if set (>= 1), otherwise all hardware threads.
int worker_count();

/// Runs fn(begin, end) over a static partition of [begin, end) across the
/// workers. Partition boundaries depend only on the range and worker count;
/// callers must write to disjoint slots so results are identical for any
/// worker count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace srgeo

#endif
