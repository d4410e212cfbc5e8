#include "geostretch/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace geostretch {

namespace {

std::atomic<std::size_t> g_thread_override{0};

std::size_t resolve_thread_count() {
    std::size_t override = g_thread_override.load(std::memory_order_relaxed);
    if (override > 0) return override;
    if (const char* env = std::getenv("GEOSTRETCH_THREADS")) {
        char* end = nullptr;
        unsigned long parsed = std::strtoul(env, &end, 10);
        if (end != env && parsed > 0) return static_cast<std::size_t>(parsed);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace

void set_thread_count(std::size_t count) {
    g_thread_override.store(count, std::memory_order_relaxed);
}

std::size_t thread_count() { return resolve_thread_count(); }

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    std::size_t workers = thread_count();
    if (workers > count) workers = count;
    if (workers <= 1) {
        fn(0, count);
        return;
    }
    std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        if (begin >= count) break;
        std::size_t end = begin + chunk < count ? begin + chunk : count;
        threads.emplace_back(fn, begin, end);
    }
    for (auto& t : threads) t.join();
}

} // namespace geostretch
