#pragma once

#include <cstddef>
#include <functional>

namespace qspin {

// Worker count: QSPIN_THREADS if set and positive, else the hardware count.
unsigned thread_budget();

// Runs body(i) for i in [0, count) on up to thread_budget() threads. The
// first exception thrown by any body is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qspin
