#pragma once

// Execution policy shared by the data-parallel kernels. Every parallel kernel
// keeps a serial reference path selected by Execution::serial; tests compare
// the two and bench/ times them.

#include <cstddef>
#include <functional>

namespace jetvir {

enum class Execution { serial, parallel };

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

/// Runs body(i) for i in [0, n). Iterations must be independent; results are
/// written to per-index slots by the caller so output order never depends on
/// scheduling.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body);

}  // namespace jetvir
