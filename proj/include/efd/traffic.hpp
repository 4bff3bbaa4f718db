#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "efd/flow_key.hpp"

namespace efd {

struct FlowRecord {
    FlowKey key;
    uint32_t size = 1;  // packets, >= 1
};

// Flow size model: Constant(a) or UniformInt(a, b) inclusive.
struct SizeDist {
    enum class Kind { Constant, UniformInt };
    Kind kind = Kind::Constant;
    uint32_t a = 1;
    uint32_t b = 1;

    static SizeDist constant(uint32_t v) { return {Kind::Constant, v, v}; }
    static SizeDist uniform(uint32_t lo, uint32_t hi) { return {Kind::UniformInt, lo, hi}; }
    uint32_t min() const { return a; }
    uint32_t max() const { return kind == Kind::Constant ? a : b; }
    double mean() const { return kind == Kind::Constant ? a : (a + b) / 2.0; }
};

// How flow packets are interleaved into the stream: a uniformly random
// global permutation, or repeatedly emitting the next packet of a uniformly
// chosen still-alive flow.
enum class Interleave { Shuffled, RoundRobinRandom };

struct TrafficSpec {
    uint32_t n_flows = 0;
    double elephant_fraction = 0.0;
    SizeDist mice_size = SizeDist::constant(1);
    SizeDist elephant_size = SizeDist::uniform(20, 100);
    Interleave interleave = Interleave::Shuffled;
    uint64_t seed = 1;
    uint32_t k = 20;  // elephant threshold the dists are validated against

    // Throws std::invalid_argument when mice sizes can reach K, elephant
    // sizes can fall below K, sizes can be zero, bounds are inverted,
    // n_flows = 0, or elephant_fraction is outside [0,1].
    void validate() const;
};

struct Trace {
    std::vector<FlowKey> packets;
    std::vector<FlowRecord> flows;
    std::unordered_set<FlowKey, FlowKeyHash> truth;  // flows with size >= K used at build time

    uint64_t elephant_packets = 0;  // packets belonging to truth flows

    // Ground truth for a different threshold than the one the trace was
    // built or loaded with.
    std::unordered_set<FlowKey, FlowKeyHash> truth_for(uint32_t k) const;

    double elephant_packet_share() const {
        return packets.empty() ? 0.0
                               : static_cast<double>(elephant_packets) / static_cast<double>(packets.size());
    }
};

// Draws n_flows flows with distinct random keys, sizes the first
// floor(elephant_fraction * n_flows) of them from elephant_size and the rest
// from mice_size, and interleaves the packets. Deterministic in spec.seed.
Trace generate_trace(const TrafficSpec& spec);

// Reads the one-packet-per-line CSV format (optional header); ground truth
// is recomputed from realized per-flow counts against k.
// Throws std::runtime_error with the offending line number on malformed
// input.
Trace read_trace_csv(const std::string& path, uint32_t k);

void write_trace_csv(const Trace& trace, const std::string& path);
void write_truth_csv(const Trace& trace, const std::string& path);

// Portable bounded draw; std::uniform_int_distribution is implementation
// defined, this is not. Slight modulo bias, irrelevant at our ranges.
inline uint64_t bounded_draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

inline uint32_t draw_size(const SizeDist& dist, std::mt19937_64& rng) {
    if (dist.kind == SizeDist::Kind::Constant) return dist.a;
    return dist.a + static_cast<uint32_t>(bounded_draw(rng, dist.b - dist.a + 1ull));
}

FlowKey random_flow_key(std::mt19937_64& rng);

}  // namespace efd
