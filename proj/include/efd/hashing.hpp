#pragma once

#include <cstdint>
#include <vector>

#include "efd/flow_key.hpp"

namespace efd {

// splitmix64 finalizer; also used to derive per-stage seeds.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Family of d independent seeded hash functions, each mapping a FlowKey to a
// counter index in [0, m). Pure and stable: the same (seed, key) pair yields
// the same index on every run and platform. Immutable after construction.
class HashFamily {
public:
    // Derives d pairwise-distinct stage seeds from master_seed.
    // Throws std::invalid_argument if d == 0 or m == 0.
    HashFamily(uint64_t master_seed, uint32_t d, uint32_t m);

    // Counter index for `key` under stage hash `stage`.
    // Throws std::out_of_range if stage >= d.
    uint32_t index(uint32_t stage, const FlowKey& key) const;

    uint32_t stages() const { return static_cast<uint32_t>(seeds_.size()); }
    uint32_t buckets() const { return m_; }
    const std::vector<uint64_t>& seeds() const { return seeds_; }

private:
    std::vector<uint64_t> seeds_;
    uint32_t m_;
};

}  // namespace efd
