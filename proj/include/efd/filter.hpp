#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "efd/counter_bank.hpp"
#include "efd/flow_key.hpp"
#include "efd/hashing.hpp"

namespace efd {

// MultiStageMinRule: d stages of m counters, one hash per stage; a packet
// increments the minimum-valued counters among its d (conservative update);
// a flow is declared an elephant when its minimum counter reaches K.
//
// SingleFilterChoice: one array of m counters, d hashed choices (d = 2 in
// the classical setup); a packet increments the smallest of its choices,
// ties broken by a fair coin, so exactly one counter grows per packet;
// declaration happens when the minimum choice reaches C = K/d.
enum class Variant { MultiStageMinRule, SingleFilterChoice };

// Whether each stage refreshes on its own non-null proportion or all stages
// refresh together when the pooled proportion crosses r. Only meaningful for
// MultiStageMinRule; SingleFilterChoice has one array.
enum class RefreshScope { PerStage, Global };

struct FilterConfig {
    Variant variant = Variant::SingleFilterChoice;
    uint32_t d = 2;
    uint32_t m = 1u << 15;
    uint32_t k = 20;   // elephant size threshold, packets
    double r = 0.5;    // refresh trigger: fraction of non-null counters
    uint64_t hash_seed = 0x9d8e;
    uint64_t tie_seed = 0x517c;
    bool refresh_enabled = true;
    RefreshScope refresh_scope = RefreshScope::PerStage;
    ExecPolicy exec = ExecPolicy::Auto;

    // The per-counter declaration threshold: K for the multi-stage filter,
    // K/d for the single-filter variant.
    uint32_t counter_threshold() const;

    // Throws std::invalid_argument on violated invariants (m = 0, r outside
    // (0,1), d not dividing K for SingleFilterChoice, K = 0).
    void validate() const;
};

struct DetectionEvent {
    FlowKey key;
    uint64_t packet_index = 0;  // 0-based position in the stream
    uint32_t counter_value = 0;
};

struct FilterStats {
    uint64_t packets_seen = 0;
    uint64_t refresh_count = 0;
    uint64_t total_decrements = 0;
    std::vector<uint64_t> refresh_packet_indices;  // strictly increasing
};

class Filter {
public:
    explicit Filter(const FilterConfig& config);

    // Feeds one packet of `key`. Returns a DetectionEvent when the flow's
    // minimum associated counter lands exactly on the declaration threshold
    // after the increment; deduplication across re-crossings is the
    // caller's job. The refreshment check runs after the increment.
    std::optional<DetectionEvent> observe(const FlowKey& key);

    // Minimum of the flow's associated counters; an upper bound on the
    // flow's packet count while refreshment is disabled.
    uint32_t estimate_size(const FlowKey& key) const;

    // Tail fractions T_k per counter array (one entry for SingleFilterChoice,
    // d entries for MultiStageMinRule).
    std::vector<std::vector<double>> snapshot_tails() const;

    const FilterStats& stats() const { return stats_; }
    const FilterConfig& config() const { return cfg_; }
    uint32_t counter_threshold() const { return threshold_; }
    const HashFamily& hashes() const { return hashes_; }

    size_t bank_count() const { return banks_.size(); }
    const CounterBank& bank(size_t i) const { return banks_[i]; }
    CounterBank& bank(size_t i) { return banks_[i]; }

    // Recounts all banks' maintained aggregates from the raw arrays.
    bool audit() const;

    // Invoked with each counter array just before its refresh decrement;
    // used by the experiment harnesses to sample the pre-refresh profile.
    using PreRefreshHook = std::function<void(const CounterBank&, size_t bank_index)>;
    void set_pre_refresh_hook(PreRefreshHook hook) { pre_refresh_hook_ = std::move(hook); }

private:
    bool maybe_refresh();
    bool bank_at_trigger(const CounterBank& b) const {
        return static_cast<double>(b.nonnull()) / static_cast<double>(b.size()) >= cfg_.r;
    }
    void refresh_bank(size_t i);

    FilterConfig cfg_;
    uint32_t threshold_;
    HashFamily hashes_;
    std::vector<CounterBank> banks_;
    std::mt19937_64 tie_rng_;
    FilterStats stats_;
    PreRefreshHook pre_refresh_hook_;
    std::vector<uint32_t> cells_;  // scratch: distinct cells of the current key
};

}  // namespace efd
