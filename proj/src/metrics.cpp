#include "efd/metrics.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "efd/meanfield.hpp"

namespace efd {

ConfusionCounts evaluate(std::span<const DetectionEvent> detections,
                         const std::unordered_set<FlowKey, FlowKeyHash>& truth, uint64_t n_flows) {
    std::unordered_set<FlowKey, FlowKeyHash> declared;
    declared.reserve(detections.size());
    for (const DetectionEvent& e : detections) declared.insert(e.key);

    ConfusionCounts c;
    for (const FlowKey& key : declared) {
        if (truth.contains(key)) {
            ++c.tp;
        } else {
            ++c.fp;
        }
    }
    c.fn = truth.size() - c.tp;
    c.tn = n_flows - c.tp - c.fp - c.fn;

    const uint64_t n_elephants = truth.size();
    const uint64_t n_mice = n_flows - n_elephants;
    c.fpr = n_mice == 0 ? 0.0 : static_cast<double>(c.fp) / static_cast<double>(n_mice);
    c.fnr = n_elephants == 0 ? 0.0 : static_cast<double>(c.fn) / static_cast<double>(n_elephants);
    return c;
}

GapStats refresh_interval_stats(const FilterStats& stats, size_t burn_in_gaps) {
    const auto& idx = stats.refresh_packet_indices;
    if (idx.size() < 2 || idx.size() - 1 <= burn_in_gaps)
        throw std::invalid_argument("refresh_interval_stats: not enough refreshes past burn-in");

    GapStats g;
    g.n_gaps = idx.size() - 1 - burn_in_gaps;
    double sum = 0.0;
    for (size_t i = burn_in_gaps; i + 1 < idx.size(); ++i)
        sum += static_cast<double>(idx[i + 1] - idx[i]);
    g.mean = sum / static_cast<double>(g.n_gaps);
    double sq = 0.0;
    for (size_t i = burn_in_gaps; i + 1 < idx.size(); ++i) {
        double dev = static_cast<double>(idx[i + 1] - idx[i]) - g.mean;
        sq += dev * dev;
    }
    g.stddev = std::sqrt(sq / static_cast<double>(g.n_gaps));
    g.cv = g.mean > 0.0 ? g.stddev / g.mean : 0.0;
    return g;
}

RunResult run_detector(const FilterConfig& config, const Trace& trace) {
    Filter filter(config);
    std::vector<DetectionEvent> detections;
    for (const FlowKey& key : trace.packets) {
        if (auto event = filter.observe(key)) detections.push_back(*event);
    }
    RunResult result;
    result.confusion = evaluate(detections, trace.truth, trace.flows.size());
    result.stats = filter.stats();
    return result;
}

std::vector<SweepRow> sweep_r(const FilterConfig& base_config, std::span<const double> r_values,
                              const Trace& trace) {
    for (double r : r_values)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("sweep_r: every r must lie in (0,1)");

    std::vector<SweepRow> rows(r_values.size());
    const uint32_t c = base_config.counter_threshold();
    const int n = static_cast<int>(r_values.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) {
        FilterConfig config = base_config;
        config.r = r_values[i];
        RunResult run = run_detector(config, trace);

        SweepRow& row = rows[i];
        row.r = r_values[i];
        row.fpr = run.confusion.fpr;
        row.fnr = run.confusion.fnr;
        if (run.stats.refresh_count >= 2)
            row.mean_refresh_interval_packets = refresh_interval_stats(run.stats, 0).mean;

        CycleResult fluid = cycle_to_fixed_point(config.d, config.r, c + 10);
        row.fluid_fp_bound = false_positive_bound(fluid.wbar, c);
    }
    return rows;
}

void write_confusion_csv(const ConfusionCounts& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << "tp,fp,fn,tn,fpr,fnr\n"
        << c.tp << ',' << c.fp << ',' << c.fn << ',' << c.tn << ',' << c.fpr << ',' << c.fnr
        << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_sweep_csv(std::span<const SweepRow> rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << "r,fpr,fnr,mean_gap,fluid_bound\n";
    for (const SweepRow& row : rows)
        out << row.r << ',' << row.fpr << ',' << row.fnr << ','
            << row.mean_refresh_interval_packets << ',' << row.fluid_fp_bound << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_gap_series_csv(const FilterStats& stats, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "refresh_index,packet_index,gap\n";
    const auto& idx = stats.refresh_packet_indices;
    for (size_t i = 0; i < idx.size(); ++i) {
        out << i << ',' << idx[i] << ',';
        if (i > 0) out << (idx[i] - idx[i - 1]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace efd
