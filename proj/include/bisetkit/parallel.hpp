#pragma once

#include <cstddef>
#include <functional>

namespace bisetkit {

/// Runs fn(0..n-1) on up to `jobs` threads (0 = hardware concurrency).
/// Callers are responsible for making fn(i) independent; results should be
/// written to slot i of a preallocated buffer so output order is canonical.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace bisetkit
