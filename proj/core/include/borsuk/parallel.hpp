#pragma once

#include <cstddef>
#include <functional>

namespace borsuk {

// Number of workers used by the parallel scans. Taken from the
// BORSUK_THREADS environment variable when set to a positive integer,
// otherwise std::thread::hardware_concurrency().
int worker_count();

// Runs body(begin, end, worker) over [0, n) split into one contiguous chunk
// per worker. The chunk boundaries depend only on n and the worker count, so
// per-worker partial results merged in worker order are reproducible.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, int)>& body);

}  // namespace borsuk
