#include "artinsym/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace artinsym {

namespace {

std::atomic<int> configured{0};
thread_local bool inside_worker = false;

}  // namespace

void set_worker_count(int n)
{
    configured = n < 0 ? 0 : n;
}

int worker_count()
{
    int n = configured;
    if (n > 0)
        return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1 || inside_worker) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    auto run = [&] {
        inside_worker = true;
        for (std::size_t i; (i = next++) < n;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(error_lock);
                if (!error)
                    error = std::current_exception();
                next = n;
            }
        }
        inside_worker = false;
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(run);
    run();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace artinsym
