#include "nbie/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace nbie {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    const int nt = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1));
    if (nt <= 1 || n == 0) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t block = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        const std::size_t begin = std::min(n, static_cast<std::size_t>(t) * block);
        const std::size_t end = std::min(n, begin + block);
        if (begin == end) break;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& th : pool) th.join();
}

namespace {
constexpr std::size_t kChunk = 4096;
}

double deterministic_sum(std::span<const double> terms) {
    const std::size_t n = terms.size();
    double total = 0.0;
    for (std::size_t c = 0; c < n; c += kChunk) {
        const std::size_t end = std::min(n, c + kChunk);
        double partial = 0.0;
        for (std::size_t i = c; i < end; ++i) partial += terms[i];
        total += partial;
    }
    return total;
}

} // namespace nbie
