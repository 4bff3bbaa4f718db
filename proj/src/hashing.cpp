#include "efd/hashing.hpp"

#include <algorithm>
#include <stdexcept>

namespace efd {

HashFamily::HashFamily(uint64_t master_seed, uint32_t d, uint32_t m) : m_(m) {
    if (d == 0) throw std::invalid_argument("HashFamily: d must be >= 1");
    if (m == 0) throw std::invalid_argument("HashFamily: m must be >= 1");
    seeds_.reserve(d);
    uint64_t s = master_seed;
    while (seeds_.size() < d) {
        s = splitmix64(s);
        // seeds must be pairwise distinct; a repeat is astronomically rare
        // but the invariant is cheap to enforce
        if (std::find(seeds_.begin(), seeds_.end(), s) == seeds_.end()) {
            seeds_.push_back(s);
        }
    }
}

uint32_t HashFamily::index(uint32_t stage, const FlowKey& key) const {
    if (stage >= seeds_.size()) throw std::out_of_range("HashFamily::index: stage out of range");
    uint64_t h = seeds_[stage];
    h = splitmix64(h ^ key.lo_word());
    h = splitmix64(h ^ key.hi_word());
    // plain modulo; bias < 2^-44 for m <= 2^20
    return static_cast<uint32_t>(h % m_);
}

}  // namespace efd
