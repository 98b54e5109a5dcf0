#pragma once

#include <cstdint>
#include <functional>

namespace zpmono {

// Worker count used by data-parallel counting loops. 1 by default.
int worker_count();
void set_worker_count(int n);

// Runs fn(begin, end) over disjoint chunks of [0, n). Chunk boundaries
// depend only on n, never on the worker count, so any per-chunk output
// combined in chunk order is identical for every thread configuration.
void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace zpmono
