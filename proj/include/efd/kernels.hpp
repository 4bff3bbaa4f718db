#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace efd::kernels {

// Counter-array passes, each in a serial reference version and an OpenMP
// version. Both versions are exact integer computations and produce
// identical results; the serial ones double as the oracle in tests.

// Decrement every strictly positive counter by one. Returns the number of
// counters decremented.
size_t decrement_positive_serial(std::span<uint32_t> counters);
size_t decrement_positive_parallel(std::span<uint32_t> counters);

// Number of strictly positive counters.
size_t count_nonnull_serial(std::span<const uint32_t> counters);
size_t count_nonnull_parallel(std::span<const uint32_t> counters);

// Sum of all counter values.
uint64_t value_sum_serial(std::span<const uint32_t> counters);
uint64_t value_sum_parallel(std::span<const uint32_t> counters);

// hist[v] = number of counters with value v, sized max_value + 1
// (a single [0] entry for an all-zero array).
std::vector<uint64_t> value_histogram_serial(std::span<const uint32_t> counters);
std::vector<uint64_t> value_histogram_parallel(std::span<const uint32_t> counters);

// Arrays below this size run the serial version even when parallel execution
// is requested; the fork/join overhead dominates under it.
inline constexpr size_t kParallelGrainSize = 1u << 15;

}  // namespace efd::kernels
