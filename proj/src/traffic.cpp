#include "efd/traffic.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace efd {

void TrafficSpec::validate() const {
    if (n_flows == 0) throw std::invalid_argument("TrafficSpec: n_flows must be >= 1");
    if (!(elephant_fraction >= 0.0 && elephant_fraction <= 1.0))
        throw std::invalid_argument("TrafficSpec: elephant_fraction must lie in [0,1]");
    if (mice_size.min() == 0) throw std::invalid_argument("TrafficSpec: flow sizes must be >= 1");
    if (mice_size.min() > mice_size.max())
        throw std::invalid_argument("TrafficSpec: mice size bounds inverted");
    if (elephant_size.min() > elephant_size.max())
        throw std::invalid_argument("TrafficSpec: elephant size bounds inverted");
    if (mice_size.max() >= k)
        throw std::invalid_argument("TrafficSpec: mice sizes must stay below K");
    if (elephant_fraction > 0.0 && elephant_size.min() < k)
        throw std::invalid_argument("TrafficSpec: elephant sizes must be at least K");
}

FlowKey random_flow_key(std::mt19937_64& rng) {
    uint64_t a = rng();
    uint64_t b = rng();
    FlowKey key;
    key.src_addr = static_cast<uint32_t>(a);
    key.dst_addr = static_cast<uint32_t>(a >> 32);
    key.src_port = static_cast<uint16_t>(b);
    key.dst_port = static_cast<uint16_t>(b >> 16);
    key.protocol = static_cast<uint8_t>(b >> 32);
    return key;
}

Trace generate_trace(const TrafficSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);

    Trace trace;
    trace.flows.reserve(spec.n_flows);
    std::unordered_set<FlowKey, FlowKeyHash> seen;
    seen.reserve(spec.n_flows * 2);

    const uint32_t n_elephants =
        static_cast<uint32_t>(spec.elephant_fraction * static_cast<double>(spec.n_flows));
    uint64_t total_packets = 0;
    for (uint32_t i = 0; i < spec.n_flows; ++i) {
        FlowKey key = random_flow_key(rng);
        while (!seen.insert(key).second) key = random_flow_key(rng);
        const SizeDist& dist = i < n_elephants ? spec.elephant_size : spec.mice_size;
        uint32_t size = draw_size(dist, rng);
        trace.flows.push_back({key, size});
        total_packets += size;
    }

    trace.packets.reserve(total_packets);
    if (spec.interleave == Interleave::Shuffled) {
        for (const FlowRecord& f : trace.flows)
            trace.packets.insert(trace.packets.end(), f.size, f.key);
        // Fisher-Yates with explicit draws, stable across platforms
        for (size_t i = trace.packets.size(); i > 1; --i)
            std::swap(trace.packets[i - 1], trace.packets[bounded_draw(rng, i)]);
    } else {
        std::vector<uint32_t> alive(trace.flows.size());
        std::vector<uint32_t> remaining(trace.flows.size());
        for (size_t i = 0; i < trace.flows.size(); ++i) {
            alive[i] = static_cast<uint32_t>(i);
            remaining[i] = trace.flows[i].size;
        }
        size_t n_alive = alive.size();
        while (n_alive > 0) {
            size_t slot = static_cast<size_t>(bounded_draw(rng, n_alive));
            uint32_t flow = alive[slot];
            trace.packets.push_back(trace.flows[flow].key);
            if (--remaining[flow] == 0) alive[slot] = alive[--n_alive];
        }
    }

    for (const FlowRecord& f : trace.flows) {
        if (f.size >= spec.k) {
            trace.truth.insert(f.key);
            trace.elephant_packets += f.size;
        }
    }
    return trace;
}

std::unordered_set<FlowKey, FlowKeyHash> Trace::truth_for(uint32_t k) const {
    std::unordered_set<FlowKey, FlowKeyHash> result;
    for (const FlowRecord& f : flows)
        if (f.size >= k) result.insert(f.key);
    return result;
}

namespace {

constexpr const char* kHeader = "src_addr,dst_addr,src_port,dst_port,protocol";

bool parse_field(const char*& p, const char* end, char sep, uint64_t max, uint64_t& out) {
    auto [ptr, ec] = std::from_chars(p, end, out);
    if (ec != std::errc() || out > max) return false;
    p = ptr;
    if (sep != '\0') {
        if (p == end || *p != sep) return false;
        ++p;
    }
    return true;
}

bool parse_packet_line(const std::string& line, FlowKey& key) {
    const char* p = line.data();
    const char* end = p + line.size();
    uint64_t src, dst, sport, dport, proto;
    if (!parse_field(p, end, ',', 0xFFFFFFFFull, src)) return false;
    if (!parse_field(p, end, ',', 0xFFFFFFFFull, dst)) return false;
    if (!parse_field(p, end, ',', 0xFFFFull, sport)) return false;
    if (!parse_field(p, end, ',', 0xFFFFull, dport)) return false;
    if (!parse_field(p, end, '\0', 0xFFull, proto)) return false;
    if (p != end) return false;
    key = {static_cast<uint32_t>(src), static_cast<uint32_t>(dst), static_cast<uint16_t>(sport),
           static_cast<uint16_t>(dport), static_cast<uint8_t>(proto)};
    return true;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Trace read_trace_csv(const std::string& path, uint32_t k) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file: " + path);

    Trace trace;
    std::unordered_map<FlowKey, uint32_t, FlowKeyHash> counts;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        if (line_no == 1 && line == kHeader) continue;
        FlowKey key;
        if (!parse_packet_line(line, key))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": malformed packet line: " + line);
        trace.packets.push_back(key);
        ++counts[key];
    }

    trace.flows.reserve(counts.size());
    for (const FlowKey& key : trace.packets) {
        auto it = counts.find(key);
        if (it == counts.end()) continue;  // already emitted, first-appearance order
        trace.flows.push_back({key, it->second});
        if (it->second >= k) {
            trace.truth.insert(key);
            trace.elephant_packets += it->second;
        }
        counts.erase(it);
    }
    return trace;
}

void write_trace_csv(const Trace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << kHeader << '\n';
    for (const FlowKey& key : trace.packets) out << format_flow_key(key) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_truth_csv(const Trace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << kHeader << '\n';
    // stable order: first appearance among flows
    for (const FlowRecord& f : trace.flows)
        if (trace.truth.contains(f.key)) out << format_flow_key(f.key) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace efd
