#pragma once

#include <cstddef>
#include <functional>

namespace lodesq {

/// Worker threads used by the pair loops. Defaults to the LODESQ_THREADS
/// environment variable (positive integer), or 1 when it is unset or invalid.
std::size_t worker_count();

/// Overrides the worker count for this process; 0 restores the environment default.
void set_worker_count(std::size_t workers);

/// Runs body(begin, end) over contiguous slices of [0, n). Slice boundaries
/// depend only on n and the worker count, so callers that combine per-index
/// results in index order are bit-reproducible for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace lodesq
