#pragma once
// Parallel map over an index range for the embarrassingly parallel (n, t)
// sweeps.  jobs == 0 selects the serial reference loop; any other value runs
// the OpenMP kernel with that many threads (1 still exercises the parallel
// code path).  Both paths must produce identical output: every work item is
// independent and sets its own working precision.

#include <cstddef>
#include <functional>

namespace shq {

void parallel_map(std::size_t count, unsigned bits, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

// Threads available to the OpenMP kernel (1 without OpenMP).
unsigned hardware_jobs();

} // namespace shq
