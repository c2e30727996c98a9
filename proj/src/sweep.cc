#include "shq/sweep.hh"

#include "shq/mp.hh"

#if defined(SHQ_HAVE_OPENMP)
#include <omp.h>
#endif

namespace shq {

void parallel_map(std::size_t count, unsigned bits, unsigned jobs,
                  const std::function<void(std::size_t)>& fn)
{
    if (jobs == 0) {
        // serial reference path
        precision_guard guard(bits);
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
#if defined(SHQ_HAVE_OPENMP)
#pragma omp parallel num_threads(static_cast<int>(jobs))
    {
        // mpfr default precision is thread-local; set it in every worker
        precision_guard guard(bits);
#pragma omp for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
    }
#else
    precision_guard guard(bits);
    for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

unsigned hardware_jobs()
{
#if defined(SHQ_HAVE_OPENMP)
    return static_cast<unsigned>(omp_get_max_threads());
#else
    return 1;
#endif
}

} // namespace shq
