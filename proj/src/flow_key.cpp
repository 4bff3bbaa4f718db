#include "efd/flow_key.hpp"

#include <charconv>

namespace efd {

std::string format_flow_key(const FlowKey& key) {
    char buf[48];
    char* p = buf;
    auto put = [&p](uint64_t v) { p = std::to_chars(p, p + 20, v).ptr; };
    put(key.src_addr);
    *p++ = ',';
    put(key.dst_addr);
    *p++ = ',';
    put(key.src_port);
    *p++ = ',';
    put(key.dst_port);
    *p++ = ',';
    put(key.protocol);
    return std::string(buf, p);
}

}  // namespace efd
