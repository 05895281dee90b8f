#pragma once

namespace expwell {

/// Which implementation of a data-parallel kernel to run. Serial is the
/// reference path; Parallel must produce bit-identical results.
enum class Exec { Serial, Parallel };

/// Thread count for Parallel kernels: EXPWELL_THREADS if set and positive,
/// otherwise the OpenMP default.
int default_threads();

/// Resolves a requested thread count (0 means default_threads()).
int resolve_threads(int requested);

}  // namespace expwell
