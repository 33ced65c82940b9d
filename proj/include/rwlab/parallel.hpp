#ifndef RWLAB_PARALLEL_HPP
#define RWLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace rwlab
{

// Runs fn(0) .. fn(count - 1) on up to `threads` worker threads. Indices are handed out in
// increasing order; if any call throws, the exception of the lowest failing index is rethrown
// after all workers have finished.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &fn);

// RWLAB_THREADS if set to a positive integer, otherwise 1.
int default_thread_count();

}  // namespace rwlab

#endif  // RWLAB_PARALLEL_HPP
