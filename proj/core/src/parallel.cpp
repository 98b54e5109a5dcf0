#include "zpmono/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace zpmono {

namespace {
std::atomic<int> g_workers{1};
constexpr std::int64_t kChunk = 256;
}  // namespace

int worker_count() { return g_workers.load(); }

void set_worker_count(int n) { g_workers.store(std::max(1, n)); }

void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (n <= 0) return;
    const int workers = std::min<std::int64_t>(worker_count(), (n + kChunk - 1) / kChunk);
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::int64_t begin = next.fetch_add(kChunk);
            if (begin >= n) break;
            fn(begin, std::min(begin + kChunk, n));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace zpmono
