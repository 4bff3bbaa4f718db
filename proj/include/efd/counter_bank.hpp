#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace efd {

// Which kernel versions a CounterBank uses for its array passes.
// Auto picks the parallel versions once the array is large enough to pay
// for the fork/join (see kernels::kParallelGrainSize); results are
// bit-identical either way.
enum class ExecPolicy { Serial, Parallel, Auto };

// One array of m small nonnegative counters with the number of strictly
// positive entries and the value sum maintained incrementally.
class CounterBank {
public:
    explicit CounterBank(uint32_t m, ExecPolicy policy = ExecPolicy::Auto);

    uint32_t size() const { return static_cast<uint32_t>(counters_.size()); }
    uint32_t value(uint32_t i) const { return counters_[i]; }
    size_t nonnull() const { return nonnull_; }
    uint64_t value_sum() const { return sum_; }
    std::span<const uint32_t> values() const { return counters_; }

    void increment(uint32_t i) {
        if (counters_[i]++ == 0) ++nonnull_;
        ++sum_;
    }

    // Overwrites counter i, keeping nonnull and the sum consistent.
    void set_value(uint32_t i, uint32_t v);

    // Decrements every strictly positive counter by one and returns how many
    // were decremented.
    size_t refresh_decrement();

    // T_k = fraction of counters with value >= k, k = 0..max value.
    // T_0 is always 1; the vector is nonincreasing.
    std::vector<double> tail_fractions() const;

    // Recounts nonnull and the sum from the raw array (serial reference);
    // true iff they match the incrementally maintained values.
    bool audit() const;

    void reset();

private:
    bool use_parallel() const;

    std::vector<uint32_t> counters_;
    size_t nonnull_ = 0;
    uint64_t sum_ = 0;
    ExecPolicy policy_;
};

}  // namespace efd
