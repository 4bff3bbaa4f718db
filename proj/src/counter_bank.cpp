#include "efd/counter_bank.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "efd/kernels.hpp"

namespace efd {

CounterBank::CounterBank(uint32_t m, ExecPolicy policy) : counters_(m, 0), policy_(policy) {
    if (m == 0) throw std::invalid_argument("CounterBank: m must be >= 1");
}

bool CounterBank::use_parallel() const {
    switch (policy_) {
        case ExecPolicy::Serial: return false;
        case ExecPolicy::Parallel: return true;
        case ExecPolicy::Auto: return counters_.size() >= kernels::kParallelGrainSize;
    }
    return false;
}

void CounterBank::set_value(uint32_t i, uint32_t v) {
    uint32_t old = counters_[i];
    if (old > 0 && v == 0) --nonnull_;
    if (old == 0 && v > 0) ++nonnull_;
    sum_ += v;
    sum_ -= old;
    counters_[i] = v;
}

size_t CounterBank::refresh_decrement() {
    size_t decremented = use_parallel() ? kernels::decrement_positive_parallel(counters_)
                                        : kernels::decrement_positive_serial(counters_);
    // every decremented counter was >= 1; those that were exactly 1 went null
    size_t still_nonnull = use_parallel() ? kernels::count_nonnull_parallel(counters_)
                                          : kernels::count_nonnull_serial(counters_);
    nonnull_ = still_nonnull;
    sum_ -= decremented;
    assert(audit());
    return decremented;
}

std::vector<double> CounterBank::tail_fractions() const {
    std::vector<uint64_t> hist = use_parallel() ? kernels::value_histogram_parallel(counters_)
                                                : kernels::value_histogram_serial(counters_);
    // suffix-sum the histogram: ge[k] = number of counters with value >= k
    std::vector<double> tails(hist.size());
    uint64_t ge = 0;
    const double m = static_cast<double>(counters_.size());
    for (size_t k = hist.size(); k-- > 0;) {
        ge += hist[k];
        tails[k] = static_cast<double>(ge) / m;
    }
    return tails;
}

bool CounterBank::audit() const {
    return kernels::count_nonnull_serial(counters_) == nonnull_ &&
           kernels::value_sum_serial(counters_) == sum_;
}

void CounterBank::reset() {
    std::fill(counters_.begin(), counters_.end(), 0u);
    nonnull_ = 0;
    sum_ = 0;
}

}  // namespace efd
