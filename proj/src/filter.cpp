#include "efd/filter.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace efd {

uint32_t FilterConfig::counter_threshold() const {
    return variant == Variant::SingleFilterChoice ? k / d : k;
}

void FilterConfig::validate() const {
    if (d == 0) throw std::invalid_argument("FilterConfig: d must be >= 1");
    if (m == 0) throw std::invalid_argument("FilterConfig: m must be >= 1");
    if (k == 0) throw std::invalid_argument("FilterConfig: K must be >= 1");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("FilterConfig: r must lie in (0,1)");
    if (variant == Variant::SingleFilterChoice && k % d != 0)
        throw std::invalid_argument("FilterConfig: d must divide K so that C = K/d is integral");
}

Filter::Filter(const FilterConfig& config)
    : cfg_(config),
      threshold_((config.validate(), config.counter_threshold())),
      hashes_(config.hash_seed, config.d, config.m),
      tie_rng_(config.tie_seed) {
    size_t n_banks = cfg_.variant == Variant::MultiStageMinRule ? cfg_.d : 1;
    banks_.reserve(n_banks);
    for (size_t i = 0; i < n_banks; ++i) banks_.emplace_back(cfg_.m, cfg_.exec);
    cells_.reserve(cfg_.d);
}

std::optional<DetectionEvent> Filter::observe(const FlowKey& key) {
    const uint64_t packet_index = stats_.packets_seen++;
    uint32_t post_min = std::numeric_limits<uint32_t>::max();

    if (cfg_.variant == Variant::MultiStageMinRule) {
        uint32_t min_value = std::numeric_limits<uint32_t>::max();
        cells_.resize(cfg_.d);
        for (uint32_t j = 0; j < cfg_.d; ++j) {
            cells_[j] = hashes_.index(j, key);
            min_value = std::min(min_value, banks_[j].value(cells_[j]));
        }
        // conservative update: only counters sitting at the minimum grow
        for (uint32_t j = 0; j < cfg_.d; ++j) {
            if (banks_[j].value(cells_[j]) == min_value) banks_[j].increment(cells_[j]);
        }
        post_min = min_value + 1;
    } else {
        // the d hashed choices may land on the same cell; the flow's
        // counters are the distinct cells
        cells_.clear();
        for (uint32_t j = 0; j < cfg_.d; ++j) {
            uint32_t idx = hashes_.index(j, key);
            if (std::find(cells_.begin(), cells_.end(), idx) == cells_.end()) cells_.push_back(idx);
        }
        CounterBank& bank = banks_[0];
        uint32_t min_value = std::numeric_limits<uint32_t>::max();
        for (uint32_t idx : cells_) min_value = std::min(min_value, bank.value(idx));
        uint32_t n_min = 0;
        for (uint32_t idx : cells_) n_min += (bank.value(idx) == min_value);
        // exactly one counter grows: the unique smallest, or a fair pick
        // among tied smallest
        uint32_t pick = n_min > 1 ? static_cast<uint32_t>(tie_rng_() % n_min) : 0;
        for (uint32_t idx : cells_) {
            if (bank.value(idx) == min_value && pick-- == 0) {
                bank.increment(idx);
                break;
            }
        }
        post_min = std::numeric_limits<uint32_t>::max();
        for (uint32_t idx : cells_) post_min = std::min(post_min, bank.value(idx));
    }

    std::optional<DetectionEvent> event;
    if (post_min == threshold_) event = DetectionEvent{key, packet_index, post_min};

    if (cfg_.refresh_enabled && maybe_refresh()) {
        stats_.refresh_count++;
        stats_.refresh_packet_indices.push_back(packet_index);
    }
    return event;
}

bool Filter::maybe_refresh() {
    if (cfg_.variant == Variant::MultiStageMinRule && cfg_.refresh_scope == RefreshScope::Global) {
        size_t nonnull = 0;
        size_t total = 0;
        for (const CounterBank& b : banks_) {
            nonnull += b.nonnull();
            total += b.size();
        }
        if (static_cast<double>(nonnull) / static_cast<double>(total) < cfg_.r) return false;
        for (size_t i = 0; i < banks_.size(); ++i) refresh_bank(i);
        return true;
    }
    bool any = false;
    for (size_t i = 0; i < banks_.size(); ++i) {
        if (bank_at_trigger(banks_[i])) {
            refresh_bank(i);
            any = true;
        }
    }
    return any;
}

void Filter::refresh_bank(size_t i) {
    if (pre_refresh_hook_) pre_refresh_hook_(banks_[i], i);
    stats_.total_decrements += banks_[i].refresh_decrement();
}

uint32_t Filter::estimate_size(const FlowKey& key) const {
    uint32_t est = std::numeric_limits<uint32_t>::max();
    if (cfg_.variant == Variant::MultiStageMinRule) {
        for (uint32_t j = 0; j < cfg_.d; ++j)
            est = std::min(est, banks_[j].value(hashes_.index(j, key)));
    } else {
        for (uint32_t j = 0; j < cfg_.d; ++j)
            est = std::min(est, banks_[0].value(hashes_.index(j, key)));
    }
    return est;
}

std::vector<std::vector<double>> Filter::snapshot_tails() const {
    std::vector<std::vector<double>> tails;
    tails.reserve(banks_.size());
    for (const CounterBank& b : banks_) tails.push_back(b.tail_fractions());
    return tails;
}

bool Filter::audit() const {
    for (const CounterBank& b : banks_)
        if (!b.audit()) return false;
    return true;
}

}  // namespace efd
