#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace shiish {

/// Worker threads to use: SHIISH_WORKERS if set to a positive integer,
/// otherwise the hardware concurrency.
inline unsigned worker_count()
{
    if (const char* env = std::getenv("SHIISH_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// f applied to every item, results in input order. The first exception (by
/// index) is rethrown after all workers finish.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F f, unsigned workers = worker_count())
{
    using R = decltype(f(items.front()));
    std::vector<std::optional<R>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            try {
                slots[i].emplace(f(items[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t extra = std::min<std::size_t>(workers, items.size()) > 0
                                  ? std::min<std::size_t>(workers, items.size()) - 1
                                  : 0;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < extra; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace shiish
