#pragma once

namespace seshadri {

/// Execution policy for the batch kernels. Serial is the reference path the
/// tests compare the OpenMP path against.
enum class Exec
{
    Serial,
    Parallel,
};

/// Threads the Parallel policy may use (1 without OpenMP).
int max_threads();

} // namespace seshadri
