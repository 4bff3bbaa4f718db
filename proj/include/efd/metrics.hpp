#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "efd/filter.hpp"
#include "efd/flow_key.hpp"
#include "efd/traffic.hpp"

namespace efd {

struct ConfusionCounts {
    uint64_t tp = 0;
    uint64_t fp = 0;
    uint64_t fn = 0;
    uint64_t tn = 0;
    double fpr = 0.0;  // fp / #mice, 0 when there are no mice
    double fnr = 0.0;  // fn / #elephants, 0 when there are no elephants
};

// Deduplicates detections by flow key and scores them against ground truth.
// Order of the detection stream is irrelevant.
ConfusionCounts evaluate(std::span<const DetectionEvent> detections,
                         const std::unordered_set<FlowKey, FlowKeyHash>& truth, uint64_t n_flows);

struct GapStats {
    double mean = 0.0;
    double stddev = 0.0;
    double cv = 0.0;
    size_t n_gaps = 0;
};

// Packet gaps between consecutive refreshes, skipping the first
// burn_in_gaps of them. Throws std::invalid_argument when fewer than one
// gap survives.
GapStats refresh_interval_stats(const FilterStats& stats, size_t burn_in_gaps = 2);

struct SweepRow {
    double r = 0.0;
    double fpr = 0.0;
    double fnr = 0.0;
    double mean_refresh_interval_packets = 0.0;  // 0 when under two refreshes fired
    double fluid_fp_bound = 0.0;
};

// One fresh detector run per r over the same trace, joined with the fluid
// bound for that r. Points are independent and run in parallel.
std::vector<SweepRow> sweep_r(const FilterConfig& base_config, std::span<const double> r_values,
                              const Trace& trace);

// Convenience used by the sweep and compare commands: run a fresh filter
// over the trace and score it.
struct RunResult {
    ConfusionCounts confusion;
    FilterStats stats;
};
RunResult run_detector(const FilterConfig& config, const Trace& trace);

void write_confusion_csv(const ConfusionCounts& c, const std::string& path);
void write_sweep_csv(std::span<const SweepRow> rows, const std::string& path);
void write_gap_series_csv(const FilterStats& stats, const std::string& path);

}  // namespace efd
