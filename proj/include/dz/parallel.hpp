// Deterministic block-parallel reduction: the index range is cut into fixed
// blocks, workers claim blocks from a shared counter, per-block results are
// stored by block index and merged in block order afterwards. The result is
// therefore bit-identical for every thread count.
#ifndef DZ_PARALLEL_HPP
#define DZ_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

#include "dz/arith.hpp"

namespace dz {

template <class Result, class PerBlock>
std::vector<Result> run_blocks(i64 lo, i64 hi, i64 block_size, int threads,
                               PerBlock&& per_block) {
    if (block_size < 1) block_size = 1;
    i64 nblocks = hi > lo ? (hi - lo + block_size - 1) / block_size : 0;
    std::vector<Result> results((size_t)nblocks);
    if (nblocks == 0) return results;
    if (threads < 1) threads = 1;
    std::atomic<i64> next{0};
    auto worker = [&]() {
        for (;;) {
            i64 b = next.fetch_add(1);
            if (b >= nblocks) break;
            i64 b_lo = lo + b * block_size;
            i64 b_hi = std::min(hi, b_lo + block_size);
            results[(size_t)b] = per_block(b_lo, b_hi);
        }
    };
    if (threads == 1 || nblocks == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

// Kahan-compensated accumulator for complex doubles.
struct KahanC {
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> comp{0.0, 0.0};
    void add(std::complex<double> x) {
        std::complex<double> y = x - comp;
        std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct KahanR {
    double sum = 0, comp = 0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace dz

#endif
