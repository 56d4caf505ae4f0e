#pragma once

namespace cavpol {

/// Execution policy for data-parallel kernels. Every parallel kernel has a
/// serial path that computes identical results point by point; the serial
/// path is the reference implementation used by tests and the benchmark.
enum class Exec { Serial, Parallel };

}  // namespace cavpol
