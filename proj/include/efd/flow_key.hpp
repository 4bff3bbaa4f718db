#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace efd {

// Classical 5-tuple flow identifier.
struct FlowKey {
    uint32_t src_addr = 0;
    uint32_t dst_addr = 0;
    uint16_t src_port = 0;
    uint16_t dst_port = 0;
    uint8_t protocol = 0;

    friend bool operator==(const FlowKey&, const FlowKey&) = default;

    // Packs the 13 significant bytes into two words; used by the seeded
    // hash family and the container hasher below.
    constexpr uint64_t lo_word() const {
        return static_cast<uint64_t>(src_addr) | (static_cast<uint64_t>(dst_addr) << 32);
    }
    constexpr uint64_t hi_word() const {
        return static_cast<uint64_t>(src_port) | (static_cast<uint64_t>(dst_port) << 16) |
               (static_cast<uint64_t>(protocol) << 32);
    }
};

// "src,dst,sport,dport,proto" with decimal fields, the trace CSV row format.
std::string format_flow_key(const FlowKey& key);

// std::unordered_{set,map} support.
struct FlowKeyHash {
    size_t operator()(const FlowKey& k) const {
        uint64_t x = k.lo_word() + 0x9e3779b97f4a7c15ULL * k.hi_word();
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<size_t>(x);
    }
};

}  // namespace efd
