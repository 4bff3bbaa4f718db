#include "efd/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace efd::kernels {

size_t decrement_positive_serial(std::span<uint32_t> counters) {
    size_t decremented = 0;
    for (uint32_t& c : counters) {
        if (c > 0) {
            --c;
            ++decremented;
        }
    }
    return decremented;
}

size_t decrement_positive_parallel(std::span<uint32_t> counters) {
#ifdef _OPENMP
    if (counters.size() >= kParallelGrainSize) {
        const int64_t n = static_cast<int64_t>(counters.size());
        uint32_t* data = counters.data();
        int64_t decremented = 0;
#pragma omp parallel for schedule(static) reduction(+ : decremented)
        for (int64_t i = 0; i < n; ++i) {
            if (data[i] > 0) {
                --data[i];
                ++decremented;
            }
        }
        return static_cast<size_t>(decremented);
    }
#endif
    return decrement_positive_serial(counters);
}

size_t count_nonnull_serial(std::span<const uint32_t> counters) {
    size_t n = 0;
    for (uint32_t c : counters) n += (c > 0);
    return n;
}

size_t count_nonnull_parallel(std::span<const uint32_t> counters) {
#ifdef _OPENMP
    if (counters.size() >= kParallelGrainSize) {
        const int64_t n = static_cast<int64_t>(counters.size());
        const uint32_t* data = counters.data();
        int64_t nonnull = 0;
#pragma omp parallel for schedule(static) reduction(+ : nonnull)
        for (int64_t i = 0; i < n; ++i) nonnull += (data[i] > 0);
        return static_cast<size_t>(nonnull);
    }
#endif
    return count_nonnull_serial(counters);
}

uint64_t value_sum_serial(std::span<const uint32_t> counters) {
    uint64_t sum = 0;
    for (uint32_t c : counters) sum += c;
    return sum;
}

uint64_t value_sum_parallel(std::span<const uint32_t> counters) {
#ifdef _OPENMP
    if (counters.size() >= kParallelGrainSize) {
        const int64_t n = static_cast<int64_t>(counters.size());
        const uint32_t* data = counters.data();
        uint64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
        for (int64_t i = 0; i < n; ++i) sum += data[i];
        return sum;
    }
#endif
    return value_sum_serial(counters);
}

std::vector<uint64_t> value_histogram_serial(std::span<const uint32_t> counters) {
    uint32_t max_value = 0;
    for (uint32_t c : counters) max_value = std::max(max_value, c);
    std::vector<uint64_t> hist(static_cast<size_t>(max_value) + 1, 0);
    for (uint32_t c : counters) ++hist[c];
    return hist;
}

std::vector<uint64_t> value_histogram_parallel(std::span<const uint32_t> counters) {
#ifdef _OPENMP
    if (counters.size() >= kParallelGrainSize) {
        const int64_t n = static_cast<int64_t>(counters.size());
        const uint32_t* data = counters.data();
        uint32_t max_value = 0;
#pragma omp parallel for schedule(static) reduction(max : max_value)
        for (int64_t i = 0; i < n; ++i) max_value = std::max(max_value, data[i]);

        std::vector<uint64_t> hist(static_cast<size_t>(max_value) + 1, 0);
#pragma omp parallel
        {
            std::vector<uint64_t> local(hist.size(), 0);
#pragma omp for schedule(static) nowait
            for (int64_t i = 0; i < n; ++i) ++local[data[i]];
#pragma omp critical
            for (size_t v = 0; v < hist.size(); ++v) hist[v] += local[v];
        }
        return hist;
    }
#endif
    return value_histogram_serial(counters);
}

}  // namespace efd::kernels
