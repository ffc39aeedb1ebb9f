#pragma once

namespace graphiso {

/// Execution policy for the data-parallel kernels. Both policies use the
/// same work partition and reduce in the same order, so results are
/// bit-identical.
enum class Exec { serial, parallel };

/// Applies GRAPHISO_THREADS (if set and positive) as a cap on the OpenMP
/// worker count. Returns the resulting worker count.
int configure_threads_from_env();

int worker_count();

}  // namespace graphiso
