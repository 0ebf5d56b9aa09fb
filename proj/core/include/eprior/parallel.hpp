#pragma once

#include <cstddef>
#include <functional>

namespace eprior {

// Process-wide worker count for parallel loops (0 = hardware concurrency).
// Results are independent of this setting: every loop index derives its own
// RNG substream and writes only its own slot.
void set_thread_count(int n);
int thread_count();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace eprior
