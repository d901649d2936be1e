#pragma once

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace casimir::sweep {

/// Evaluation grid for parameter sweeps.
enum class GridScale { linear, logarithmic };

inline std::vector<double> make_grid(double start, double stop, int points,
                                     GridScale scale) {
    if (!(start < stop)) throw std::invalid_argument("grid: start must be below stop");
    if (points < 2) throw std::invalid_argument("grid: need at least 2 points");
    if (scale == GridScale::logarithmic && !(start > 0.0))
        throw std::invalid_argument("grid: log scale needs a positive start");
    std::vector<double> grid(points);
    if (scale == GridScale::linear) {
        const double step = (stop - start) / (points - 1);
        for (int i = 0; i < points; ++i) grid[i] = start + step * i;
    } else {
        const double step = std::log(stop / start) / (points - 1);
        for (int i = 0; i < points; ++i) grid[i] = start * std::exp(step * i);
    }
    grid.back() = stop; // exact endpoint on either scale
    return grid;
}

/// Apply `f` to every grid point, possibly concurrently, returning results in
/// grid order. The first worker exception is rethrown on the calling thread.
template <class T, class F>
std::vector<T> map_ordered(const std::vector<double>& grid, F&& f) {
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(grid.size()));
    std::vector<T> out(grid.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                out[i] = f(grid[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace casimir::sweep
