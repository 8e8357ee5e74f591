#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace nbie {

/// Number of worker threads for `requested` (0 means hardware concurrency).
int resolve_threads(int requested);

/// Runs body(begin, end) on contiguous index blocks, one block per worker.
/// Results that are written per-index are identical for any thread count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

/// Sum of terms[i] in fixed chunks of 4096 combined in chunk order.
/// The value is bitwise independent of the thread count used elsewhere.
double deterministic_sum(std::span<const double> terms);

} // namespace nbie
