#ifndef PFH_PARALLEL_HPP
#define PFH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace pfh {

// Worker count from the PFH_WORKERS environment variable, falling back to
// the available hardware parallelism.
unsigned default_worker_count();

// Runs fn(0) ... fn(count-1), distributing indices over workers. Results
// must be written into per-index slots by the caller, which keeps any
// aggregation order-independent. The first exception thrown by a worker is
// rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned workers = 0);

}  // namespace pfh

#endif  // PFH_PARALLEL_HPP
