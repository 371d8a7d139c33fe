#pragma once

#include <cstddef>
#include <functional>

namespace braidcohom {

/// Worker count: BRAIDCOHOM_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() threads. The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::function<void(std::size_t)> const &body);

} // namespace braidcohom
