#pragma once

#include <cstddef>
#include <functional>

namespace pp {

// Worker count from PINGPONG_THREADS, else hardware concurrency.
unsigned thread_count();

// Runs fn(i) for i in [0, n) across worker threads. fn must only write to slot i of its output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace pp
