#pragma once

namespace cfinite {

/// Selects the OpenMP kernel or the serial reference path. Both must return
/// identical results; the serial path is kept as the test oracle.
enum class Execution { serial, parallel };

/// Worker threads the parallel path will use (1 without OpenMP).
int parallel_threads();

} // namespace cfinite
