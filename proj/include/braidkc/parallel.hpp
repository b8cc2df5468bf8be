#pragma once

#include <cstddef>
#include <functional>

namespace braidkc {

// Worker cap: BRAIDKC_THREADS env var if set, else hardware concurrency.
unsigned thread_budget();

// Runs fn(0..count-1) on up to `threads` workers. Tasks are index-addressed,
// so the result is identical to sequential execution. Rethrows the first
// task exception after joining.
void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& fn);

}  // namespace braidkc
