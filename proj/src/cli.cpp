#include "efd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "efd/filter.hpp"
#include "efd/meanfield.hpp"
#include "efd/metrics.hpp"
#include "efd/traffic.hpp"

namespace efd::cli {
namespace {

SizeDist parse_size_dist(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    auto as_u32 = [&](const std::string& s) {
        uint32_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw CLI::ValidationError("size distribution", "bad integer in '" + text + "'");
        return v;
    };
    if (parts.size() == 2 && (parts[0] == "const" || parts[0] == "constant"))
        return SizeDist::constant(as_u32(parts[1]));
    if (parts.size() == 3 && parts[0] == "uniform")
        return SizeDist::uniform(as_u32(parts[1]), as_u32(parts[2]));
    throw CLI::ValidationError("size distribution",
                               "expected const:N or uniform:LO:HI, got '" + text + "'");
}

Variant parse_variant(const std::string& text) {
    if (text == "a" || text == "A" || text == "multistage") return Variant::MultiStageMinRule;
    if (text == "b" || text == "B" || text == "single") return Variant::SingleFilterChoice;
    throw CLI::ValidationError("variant", "expected 'a' (multi-stage) or 'b' (single filter)");
}

std::vector<double> parse_r_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            values.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw CLI::ValidationError("r-list", "bad fraction '" + part + "'");
        }
    }
    if (values.empty()) throw CLI::ValidationError("r-list", "no values given");
    return values;
}

std::unordered_set<FlowKey, FlowKeyHash> read_truth_csv(const std::string& path) {
    Trace t = read_trace_csv(path, 1);  // same row format; every line one key
    std::unordered_set<FlowKey, FlowKeyHash> truth;
    for (const FlowRecord& f : t.flows) truth.insert(f.key);
    return truth;
}

std::vector<DetectionEvent> read_detections_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open detections file: " + path);
    std::vector<DetectionEvent> events;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("src_addr", 0) == 0) continue;
        DetectionEvent e;
        unsigned long long src, dst, sport, dport, proto, pkt, value;
        if (std::sscanf(line.c_str(), "%llu,%llu,%llu,%llu,%llu,%llu,%llu", &src, &dst, &sport,
                        &dport, &proto, &pkt, &value) != 7)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": malformed detection line");
        e.key = {static_cast<uint32_t>(src), static_cast<uint32_t>(dst),
                 static_cast<uint16_t>(sport), static_cast<uint16_t>(dport),
                 static_cast<uint8_t>(proto)};
        e.packet_index = pkt;
        e.counter_value = static_cast<uint32_t>(value);
        events.push_back(e);
    }
    return events;
}

void write_detections_csv(std::span<const DetectionEvent> events, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "src_addr,dst_addr,src_port,dst_port,protocol,packet_index,counter_value\n";
    for (const DetectionEvent& e : events)
        out << format_flow_key(e.key) << ',' << e.packet_index << ',' << e.counter_value << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_tails_csv(const std::vector<std::vector<double>>& tails, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    out << "bank,k,tail\n";
    for (size_t bank = 0; bank < tails.size(); ++bank)
        for (size_t k = 0; k < tails[bank].size(); ++k)
            out << bank << ',' << k << ',' << tails[bank][k] << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_stats_csv(const FilterStats& stats, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "packets_seen,refresh_count,total_decrements\n"
        << stats.packets_seen << ',' << stats.refresh_count << ',' << stats.total_decrements
        << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Minimal line chart of fpr/fnr/fluid bound against r. The CSV is the
// contract; this is a convenience rendering.
void write_sweep_svg(std::span<const SweepRow> rows, const std::string& path) {
    const double width = 640, height = 480, margin = 60;
    double r_lo = rows.front().r, r_hi = rows.back().r;
    for (const SweepRow& row : rows) {
        r_lo = std::min(r_lo, row.r);
        r_hi = std::max(r_hi, row.r);
    }
    if (r_hi == r_lo) r_hi = r_lo + 1e-9;
    double y_hi = 1e-9;
    for (const SweepRow& row : rows)
        y_hi = std::max({y_hi, row.fpr, row.fnr, row.fluid_fp_bound});

    auto x_of = [&](double r) { return margin + (r - r_lo) / (r_hi - r_lo) * (width - 2 * margin); };
    auto y_of = [&](double v) { return height - margin - v / y_hi * (height - 2 * margin); };
    auto polyline = [&](auto value_of, const char* color) {
        std::string points;
        for (const SweepRow& row : rows)
            points += std::to_string(x_of(row.r)) + "," + std::to_string(y_of(value_of(row))) + " ";
        return "<polyline fill='none' stroke='" + std::string(color) + "' stroke-width='2' points='" +
               points + "'/>\n";
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
        << "<line x1='" << margin << "' y1='" << height - margin << "' x2='" << width - margin
        << "' y2='" << height - margin << "' stroke='black'/>\n"
        << "<line x1='" << margin << "' y1='" << margin << "' x2='" << margin << "' y2='"
        << height - margin << "' stroke='black'/>\n"
        << polyline([](const SweepRow& s) { return s.fpr; }, "#c0392b")
        << polyline([](const SweepRow& s) { return s.fnr; }, "#2980b9")
        << polyline([](const SweepRow& s) { return s.fluid_fp_bound; }, "#27ae60")
        << "<text x='" << width / 2 << "' y='" << height - margin / 3
        << "' text-anchor='middle'>r</text>\n"
        << "<text x='" << width - margin << "' y='" << margin - 20
        << "' text-anchor='end'>fpr (red)  fnr (blue)  fluid bound (green)</text>\n</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

struct GenerateArgs {
    uint32_t flows = 0;
    double elephant_frac = 0.0;
    std::string mice = "const:1";
    std::string elephant = "uniform:20:100";
    std::string interleave = "shuffled";
    uint64_t seed = 1;
    uint32_t k = 20;

    TrafficSpec to_spec() const {
        TrafficSpec spec;
        spec.n_flows = flows;
        spec.elephant_fraction = elephant_frac;
        spec.mice_size = parse_size_dist(mice);
        spec.elephant_size = parse_size_dist(elephant);
        if (interleave == "shuffled") {
            spec.interleave = Interleave::Shuffled;
        } else if (interleave == "roundrobin") {
            spec.interleave = Interleave::RoundRobinRandom;
        } else {
            throw CLI::ValidationError("interleave", "expected 'shuffled' or 'roundrobin'");
        }
        spec.seed = seed;
        spec.k = k;
        return spec;
    }
};

void add_generate_options(CLI::App* cmd, GenerateArgs& args, bool with_k = true) {
    cmd->add_option("--flows", args.flows, "number of flows")->required();
    cmd->add_option("--elephant-frac", args.elephant_frac, "fraction of flows that are elephants");
    cmd->add_option("--mice", args.mice, "mice size dist, const:N or uniform:LO:HI");
    cmd->add_option("--elephant", args.elephant, "elephant size dist");
    cmd->add_option("--interleave", args.interleave, "shuffled or roundrobin");
    cmd->add_option("--seed", args.seed, "generator seed");
    if (with_k) cmd->add_option("--k", args.k, "elephant threshold in packets");
}

struct FilterArgs {
    std::string variant = "b";
    uint32_t d = 2;
    uint32_t m = 1u << 15;
    uint32_t k = 20;
    double r = 0.5;
    uint64_t hash_seed = 0x9d8e;
    uint64_t tie_seed = 0x517c;
    bool no_refresh = false;
    std::string refresh_scope = "perstage";

    FilterConfig to_config() const {
        FilterConfig config;
        config.variant = parse_variant(variant);
        config.d = d;
        config.m = m;
        config.k = k;
        config.r = r;
        config.hash_seed = hash_seed;
        config.tie_seed = tie_seed;
        config.refresh_enabled = !no_refresh;
        if (refresh_scope == "perstage") {
            config.refresh_scope = RefreshScope::PerStage;
        } else if (refresh_scope == "global") {
            config.refresh_scope = RefreshScope::Global;
        } else {
            throw CLI::ValidationError("refresh-scope", "expected 'perstage' or 'global'");
        }
        return config;
    }
};

void add_filter_options(CLI::App* cmd, FilterArgs& args) {
    cmd->add_option("--variant", args.variant, "a (multi-stage min-rule) or b (single filter)");
    cmd->add_option("--d", args.d, "hash functions / stages");
    cmd->add_option("--m", args.m, "counters per array");
    cmd->add_option("--k", args.k, "elephant threshold in packets");
    cmd->add_option("--r", args.r, "refresh trigger fraction");
    cmd->add_option("--hash-seed", args.hash_seed, "seed of the hash family");
    cmd->add_option("--tie-seed", args.tie_seed, "seed of the tie-break coin");
    cmd->add_flag("--no-refresh", args.no_refresh, "disable the refreshment mechanism");
    cmd->add_option("--refresh-scope", args.refresh_scope,
                    "perstage or global (multi-stage variant only)");
}

int run_app(int argc, const char* const* argv) {
    CLI::App app{"elephant-flow detection toolkit: counting filters with adaptive refreshment"};
    app.require_subcommand(1);
    // --config itself is consumed by expand_config_args before parsing; the
    // option exists so it shows up in --help
    static std::string config_path_doc_only;
    auto with_config = [](CLI::App* cmd) {
        cmd->add_option("--config", config_path_doc_only,
                        "flat key=value config file (keys are long option names)");
        return cmd;
    };

    // ---- generate ----
    GenerateArgs gen;
    std::string gen_out = "trace.csv", gen_truth_out = "truth.csv";
    CLI::App* cmd_generate = with_config(app.add_subcommand("generate", "write a synthetic trace CSV"));
    add_generate_options(cmd_generate, gen);
    cmd_generate->add_option("--out", gen_out, "trace CSV path");
    cmd_generate->add_option("--truth-out", gen_truth_out, "ground-truth CSV path");

    // ---- detect ----
    FilterArgs det_filter;
    std::string det_trace, det_out = "detections.csv", det_stats_out = "stats.csv", det_gaps_out,
                det_tails_out;
    CLI::App* cmd_detect = with_config(app.add_subcommand("detect", "run a filter over a trace CSV"));
    cmd_detect->add_option("--trace", det_trace, "trace CSV path")->required();
    add_filter_options(cmd_detect, det_filter);
    cmd_detect->add_option("--out", det_out, "detections CSV path");
    cmd_detect->add_option("--stats-out", det_stats_out, "run stats CSV path");
    cmd_detect->add_option("--gaps-out", det_gaps_out, "refresh gap series CSV path");
    cmd_detect->add_option("--tails-out", det_tails_out, "final counter tail profile CSV path");

    // ---- evaluate ----
    std::string eval_detections, eval_truth, eval_out = "confusion.csv";
    uint64_t eval_flows = 0;
    CLI::App* cmd_evaluate =
        with_config(app.add_subcommand("evaluate", "score detections against ground truth"));
    cmd_evaluate->add_option("--detections", eval_detections, "detections CSV")->required();
    cmd_evaluate->add_option("--truth", eval_truth, "ground-truth CSV")->required();
    cmd_evaluate->add_option("--flows", eval_flows, "total number of distinct flows")->required();
    cmd_evaluate->add_option("--out", eval_out, "confusion CSV path");

    // ---- meanfield ----
    uint32_t mf_d = 2, mf_c = 10, mf_kmax = 0, mf_max_cycles = 10000;
    double mf_r = 0.5, mf_dt = 1e-3, mf_tol = 1e-8;
    std::string mf_out = "wbar.csv";
    CLI::App* cmd_meanfield = with_config(
        app.add_subcommand("meanfield", "fluid fixed point, period and false-positive bound"));
    cmd_meanfield->add_option("--d", mf_d, "choices");
    cmd_meanfield->add_option("--r", mf_r, "refresh trigger fraction");
    cmd_meanfield->add_option("--c", mf_c, "per-counter declaration threshold C");
    cmd_meanfield->add_option("--kmax", mf_kmax, "tail truncation depth (default C+10)");
    cmd_meanfield->add_option("--dt", mf_dt, "Euler step, mice per counter");
    cmd_meanfield->add_option("--tol", mf_tol, "sup-norm fixed-point tolerance");
    cmd_meanfield->add_option("--max-cycles", mf_max_cycles, "cycle budget");
    cmd_meanfield->add_option("--out", mf_out, "wbar CSV path");

    // ---- sweep ----
    FilterArgs sweep_filter;
    GenerateArgs sweep_gen;
    std::string sweep_trace, sweep_r_list = "0.3,0.5,0.7";
    std::string sweep_out = "sweep.csv", sweep_svg;
    uint32_t sweep_replicas = 1;
    CLI::App* cmd_sweep = with_config(app.add_subcommand(
        "sweep", "false positive/negative trade-off across refresh thresholds r"));
    cmd_sweep->add_option("--trace", sweep_trace, "trace CSV (omit to generate per replica)");
    add_filter_options(cmd_sweep, sweep_filter);
    add_generate_options(cmd_sweep, sweep_gen, /*with_k=*/false);  // the filter's K applies
    cmd_sweep->get_option("--flows")->required(false);
    cmd_sweep->add_option("--r-list", sweep_r_list, "comma-separated r values");
    cmd_sweep->add_option("--replicas", sweep_replicas,
                          "independent seeded traces to average over (generated mode)");
    cmd_sweep->add_option("--out", sweep_out, "sweep CSV path");
    cmd_sweep->add_option("--svg", sweep_svg, "optional SVG line plot path");

    // ---- compare ----
    FilterArgs cmp_filter;
    std::string cmp_trace, cmp_out = "compare.csv";
    CLI::App* cmd_compare = with_config(app.add_subcommand(
        "compare", "multi-stage vs single-filter variants at equal total memory"));
    cmd_compare->add_option("--trace", cmp_trace, "trace CSV path")->required();
    add_filter_options(cmd_compare, cmp_filter);
    cmd_compare->add_option("--out", cmp_out, "side-by-side CSV path");

    CLI11_PARSE(app, argc, argv);

    if (cmd_generate->parsed()) {
        Trace trace = generate_trace(gen.to_spec());
        write_trace_csv(trace, gen_out);
        write_truth_csv(trace, gen_truth_out);
        std::cout << "flows=" << trace.flows.size() << " packets=" << trace.packets.size()
                  << " elephants=" << trace.truth.size()
                  << " elephant_packet_share=" << trace.elephant_packet_share() << '\n';
        return 0;
    }

    if (cmd_detect->parsed()) {
        FilterConfig config = det_filter.to_config();
        config.validate();
        Trace trace = read_trace_csv(det_trace, config.k);
        Filter filter(config);
        std::vector<DetectionEvent> events;
        for (const FlowKey& key : trace.packets) {
            if (auto event = filter.observe(key)) events.push_back(*event);
        }
        write_detections_csv(events, det_out);
        write_stats_csv(filter.stats(), det_stats_out);
        if (!det_gaps_out.empty()) write_gap_series_csv(filter.stats(), det_gaps_out);
        if (!det_tails_out.empty()) write_tails_csv(filter.snapshot_tails(), det_tails_out);
        std::cout << "packets=" << filter.stats().packets_seen << " detections=" << events.size()
                  << " refreshes=" << filter.stats().refresh_count << '\n';
        return 0;
    }

    if (cmd_evaluate->parsed()) {
        std::vector<DetectionEvent> detections = read_detections_csv(eval_detections);
        auto truth = read_truth_csv(eval_truth);
        if (eval_flows < truth.size())
            throw std::runtime_error("evaluate: --flows is smaller than the truth set");
        ConfusionCounts c = evaluate(detections, truth, eval_flows);
        write_confusion_csv(c, eval_out);
        std::cout << "tp=" << c.tp << " fp=" << c.fp << " fn=" << c.fn << " tn=" << c.tn
                  << " fpr=" << c.fpr << " fnr=" << c.fnr << '\n';
        return 0;
    }

    if (cmd_meanfield->parsed()) {
        uint32_t kmax = mf_kmax == 0 ? mf_c + 10 : mf_kmax;
        CycleResult result = cycle_to_fixed_point(mf_d, mf_r, kmax, mf_dt, mf_tol, mf_max_cycles);
        write_meanfield_csv(result, mf_out);
        std::cout.precision(12);
        std::cout << "cycles=" << result.cycles << " period=" << result.period
                  << " fp_bound_above_c=" << false_positive_bound(result.wbar, mf_c)
                  << " tail_at_c=" << detection_tail(result.wbar, mf_c) << '\n';
        return 0;
    }

    if (cmd_sweep->parsed()) {
        std::vector<double> r_values = parse_r_list(sweep_r_list);
        FilterConfig base = sweep_filter.to_config();
        std::vector<SweepRow> rows;
        if (!sweep_trace.empty()) {
            Trace trace = read_trace_csv(sweep_trace, base.k);
            rows = sweep_r(base, r_values, trace);
        } else {
            if (sweep_gen.flows == 0)
                throw std::runtime_error("sweep: give --trace or generation flags (--flows ...)");
            sweep_gen.k = base.k;
            std::vector<std::vector<SweepRow>> replica_rows(sweep_replicas);
            const int n = static_cast<int>(sweep_replicas);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (int i = 0; i < n; ++i) {
                TrafficSpec spec = sweep_gen.to_spec();
                spec.seed = sweep_gen.seed + static_cast<uint64_t>(i);
                Trace trace = generate_trace(spec);
                replica_rows[i] = sweep_r(base, r_values, trace);
            }
            rows = replica_rows[0];
            for (size_t i = 1; i < replica_rows.size(); ++i) {
                for (size_t j = 0; j < rows.size(); ++j) {
                    rows[j].fpr += replica_rows[i][j].fpr;
                    rows[j].fnr += replica_rows[i][j].fnr;
                    rows[j].mean_refresh_interval_packets +=
                        replica_rows[i][j].mean_refresh_interval_packets;
                }
            }
            for (SweepRow& row : rows) {
                row.fpr /= sweep_replicas;
                row.fnr /= sweep_replicas;
                row.mean_refresh_interval_packets /= sweep_replicas;
            }
        }
        write_sweep_csv(rows, sweep_out);
        if (!sweep_svg.empty()) write_sweep_svg(rows, sweep_svg);
        for (const SweepRow& row : rows)
            std::cout << "r=" << row.r << " fpr=" << row.fpr << " fnr=" << row.fnr
                      << " mean_gap=" << row.mean_refresh_interval_packets
                      << " fluid_bound=" << row.fluid_fp_bound << '\n';
        return 0;
    }

    if (cmd_compare->parsed()) {
        FilterConfig base = cmp_filter.to_config();
        Trace trace = read_trace_csv(cmp_trace, base.k);

        FilterConfig config_a = base;
        config_a.variant = Variant::MultiStageMinRule;
        FilterConfig config_b = base;
        config_b.variant = Variant::SingleFilterChoice;
        config_b.m = base.d * base.m;  // equal total memory: d stages of m vs one array of d*m
        config_a.validate();
        config_b.validate();

        RunResult run_a = run_detector(config_a, trace);

        // variant B runs with the exactly-one-increment identity checked at
        // every packet
        Filter filter_b(config_b);
        std::vector<DetectionEvent> events_b;
        bool conservation_ok = true;
        for (const FlowKey& key : trace.packets) {
            if (auto event = filter_b.observe(key)) events_b.push_back(*event);
            conservation_ok =
                conservation_ok && filter_b.bank(0).value_sum() + filter_b.stats().total_decrements ==
                                       filter_b.stats().packets_seen;
        }
        conservation_ok = conservation_ok && filter_b.audit();
        ConfusionCounts conf_b = evaluate(events_b, trace.truth, trace.flows.size());

        std::ofstream out(cmp_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + cmp_out);
        out.precision(17);
        out << "variant,d,m,total_counters,tp,fp,fn,tn,fpr,fnr,refresh_count,conservation_ok\n";
        out << "a," << config_a.d << ',' << config_a.m << ','
            << static_cast<uint64_t>(config_a.d) * config_a.m << ',' << run_a.confusion.tp << ','
            << run_a.confusion.fp << ',' << run_a.confusion.fn << ',' << run_a.confusion.tn << ','
            << run_a.confusion.fpr << ',' << run_a.confusion.fnr << ','
            << run_a.stats.refresh_count << ",\n";
        out << "b," << config_b.d << ',' << config_b.m << ',' << config_b.m << ','
            << conf_b.tp << ',' << conf_b.fp << ',' << conf_b.fn << ',' << conf_b.tn << ','
            << conf_b.fpr << ',' << conf_b.fnr << ',' << filter_b.stats().refresh_count << ','
            << (conservation_ok ? 1 : 0) << '\n';
        if (!out) throw std::runtime_error("write failed: " + cmp_out);

        std::cout << "a: fpr=" << run_a.confusion.fpr << " fnr=" << run_a.confusion.fnr
                  << " | b: fpr=" << conf_b.fpr << " fnr=" << conf_b.fnr
                  << " conservation=" << (conservation_ok ? "ok" : "VIOLATED") << '\n';
        return conservation_ok ? 0 : 1;
    }

    return 0;
}

// Replaces "--config FILE" with the file's key=value lines, rendered as
// --key=value tokens. Keys are long option names without the dashes; blank
// lines and # comments are skipped; options also given explicitly win.
std::vector<std::string> expand_config_args(std::vector<std::string> args) {
    for (size_t i = 0; i < args.size(); ++i) {
        std::string file;
        if (args[i] == "--config" && i + 1 < args.size()) {
            file = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            file = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
        } else {
            continue;
        }

        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open config file: " + file);
        auto explicitly_given = [&args](const std::string& flag) {
            return std::any_of(args.begin(), args.end(), [&flag](const std::string& a) {
                return a == flag || a.rfind(flag + "=", 0) == 0;
            });
        };
        std::string line;
        size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            size_t eq = line.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::runtime_error(file + ":" + std::to_string(line_no) +
                                         ": expected key=value");
            std::string flag = "--" + line.substr(0, eq);
            std::string value = line.substr(eq + 1);
            if (!explicitly_given(flag))
                args.push_back(value.empty() ? flag : flag + "=" + value);
        }
        break;  // one config file per invocation
    }
    return args;
}

}  // namespace

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

int run(const std::vector<std::string>& args) {
    try {
        std::vector<std::string> expanded = expand_config_args(args);
        std::vector<const char*> argv;
        argv.push_back("efd");
        for (const std::string& a : expanded) argv.push_back(a.c_str());
        return run_app(static_cast<int>(argv.size()), argv.data());
    } catch (const std::exception& e) {
        std::cerr << "efd: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace efd::cli
