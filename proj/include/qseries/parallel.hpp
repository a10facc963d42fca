#pragma once

#include <cstddef>

#ifdef QSERIES_USE_OPENMP
#include <omp.h>
#endif

namespace qseries {

/// Resolves a requested worker count; 0 means "use every available thread".
inline int resolve_workers(int requested)
{
#ifdef QSERIES_USE_OPENMP
    if (requested <= 0) {
        return omp_get_max_threads();
    }
    return requested;
#else
    (void)requested;
    return 1;
#endif
}

} // namespace qseries
