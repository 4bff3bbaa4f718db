#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <unordered_map>

#include "efd/traffic.hpp"

using namespace efd;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("efd_traffic_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::unordered_map<FlowKey, uint32_t, FlowKeyHash> exact_counts(const Trace& trace) {
    std::unordered_map<FlowKey, uint32_t, FlowKeyHash> counts;
    for (const FlowKey& key : trace.packets) ++counts[key];
    return counts;
}

}  // namespace

TEST_CASE("all-mice spec yields one packet per flow and empty truth") {
    TrafficSpec spec;
    spec.n_flows = 10;
    spec.elephant_fraction = 0.0;
    spec.mice_size = SizeDist::constant(1);
    spec.seed = 3;
    Trace trace = generate_trace(spec);
    CHECK(trace.packets.size() == 10);
    CHECK(trace.flows.size() == 10);
    CHECK(trace.truth.empty());
}

TEST_CASE("elephant count and truth follow the construction") {
    TrafficSpec spec;
    spec.n_flows = 100;
    spec.elephant_fraction = 0.1;
    spec.mice_size = SizeDist::uniform(1, 19);
    spec.elephant_size = SizeDist::uniform(20, 100);
    spec.seed = 4;
    Trace trace = generate_trace(spec);
    CHECK(trace.flows.size() == 100);
    CHECK(trace.truth.size() == 10);

    auto counts = exact_counts(trace);
    CHECK(counts.size() == 100);
    for (const FlowRecord& f : trace.flows) {
        CHECK(counts[f.key] == f.size);
        CHECK(trace.truth.contains(f.key) == (f.size >= 20));
    }
}

TEST_CASE("spec violations are rejected") {
    TrafficSpec spec;
    spec.n_flows = 0;
    CHECK_THROWS_AS(generate_trace(spec), std::invalid_argument);

    spec.n_flows = 10;
    spec.elephant_fraction = 1.5;
    CHECK_THROWS_AS(generate_trace(spec), std::invalid_argument);

    spec.elephant_fraction = 0.1;
    spec.mice_size = SizeDist::uniform(1, 25);  // mice may reach K = 20
    CHECK_THROWS_AS(generate_trace(spec), std::invalid_argument);

    spec.mice_size = SizeDist::uniform(1, 19);
    spec.elephant_size = SizeDist::uniform(10, 100);  // elephants may fall under K
    CHECK_THROWS_AS(generate_trace(spec), std::invalid_argument);
}

TEST_CASE("identical seeds reproduce the trace, different seeds do not") {
    TrafficSpec spec;
    spec.n_flows = 500;
    spec.elephant_fraction = 0.1;
    spec.mice_size = SizeDist::uniform(1, 19);
    spec.seed = 77;
    Trace t1 = generate_trace(spec);
    Trace t2 = generate_trace(spec);
    CHECK(t1.packets == t2.packets);

    spec.seed = 78;
    Trace t3 = generate_trace(spec);
    CHECK(t1.packets != t3.packets);
}

TEST_CASE("interleave policy permutes packets without changing flow sizes") {
    TrafficSpec spec;
    spec.n_flows = 200;
    spec.elephant_fraction = 0.2;
    spec.mice_size = SizeDist::uniform(1, 19);
    spec.elephant_size = SizeDist::uniform(20, 60);
    spec.seed = 5;

    spec.interleave = Interleave::Shuffled;
    Trace shuffled = generate_trace(spec);
    spec.interleave = Interleave::RoundRobinRandom;
    Trace round_robin = generate_trace(spec);

    CHECK(shuffled.packets.size() == round_robin.packets.size());
    CHECK(exact_counts(shuffled) == exact_counts(round_robin));
    CHECK(shuffled.truth == round_robin.truth);
}

TEST_CASE("elephant packet share lands where the size models put it") {
    // 1000 elephants of mean 60 against 9000 mice of mean 10: 40% share
    TrafficSpec spec;
    spec.n_flows = 10000;
    spec.elephant_fraction = 0.1;
    spec.mice_size = SizeDist::uniform(1, 19);
    spec.elephant_size = SizeDist::uniform(20, 100);
    spec.seed = 6;
    Trace trace = generate_trace(spec);
    CHECK(trace.elephant_packet_share() == doctest::Approx(0.40).epsilon(0.05));

    // stretching the elephant sizes reaches the 80-90% regime
    spec.elephant_size = SizeDist::uniform(20, 2000);
    Trace heavy = generate_trace(spec);
    CHECK(heavy.elephant_packet_share() > 0.80);
    CHECK(heavy.elephant_packet_share() < 0.95);
}

TEST_CASE("trace csv round-trips and recomputes truth against K") {
    TempDir dir;
    TrafficSpec spec;
    spec.n_flows = 50;
    spec.elephant_fraction = 0.2;
    spec.mice_size = SizeDist::uniform(1, 19);
    spec.elephant_size = SizeDist::uniform(20, 40);
    spec.seed = 8;
    Trace trace = generate_trace(spec);

    write_trace_csv(trace, dir.file("t.csv"));
    Trace reread = read_trace_csv(dir.file("t.csv"), 20);
    CHECK(reread.packets == trace.packets);
    CHECK(reread.truth == trace.truth);

    // a stricter threshold shrinks the truth set
    Trace strict = read_trace_csv(dir.file("t.csv"), 41);
    CHECK(strict.truth.empty());
    CHECK(strict.truth_for(20) == trace.truth);
}

TEST_CASE("repeated lines accumulate into one flow") {
    TempDir dir;
    {
        std::ofstream out(dir.file("three.csv"));
        for (int i = 0; i < 3; ++i) out << "1,2,3,4,6\n";
    }
    Trace three = read_trace_csv(dir.file("three.csv"), 20);
    CHECK(three.flows.size() == 1);
    CHECK(three.flows[0].size == 3);
    CHECK(three.truth.empty());

    {
        std::ofstream out(dir.file("twenty.csv"));
        for (int i = 0; i < 20; ++i) out << "1,2,3,4,6\n";
    }
    Trace twenty = read_trace_csv(dir.file("twenty.csv"), 20);
    CHECK(twenty.truth.size() == 1);
    CHECK(twenty.truth.contains(FlowKey{1, 2, 3, 4, 6}));
}

TEST_CASE("header-only and empty files give empty traces") {
    TempDir dir;
    {
        std::ofstream out(dir.file("header.csv"));
        out << "src_addr,dst_addr,src_port,dst_port,protocol\n";
    }
    Trace t = read_trace_csv(dir.file("header.csv"), 20);
    CHECK(t.packets.empty());
    CHECK(t.flows.empty());

    { std::ofstream out(dir.file("empty.csv")); }
    Trace e = read_trace_csv(dir.file("empty.csv"), 20);
    CHECK(e.packets.empty());
}

TEST_CASE("malformed lines are reported with their line number") {
    TempDir dir;
    {
        std::ofstream out(dir.file("bad.csv"));
        out << "1,2,3,4,6\n";
        out << "1,2,3,4\n";  // missing field
    }
    try {
        read_trace_csv(dir.file("bad.csv"), 20);
        REQUIRE(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }

    {
        std::ofstream out(dir.file("range.csv"));
        out << "1,2,3,700000,6\n";  // port out of range
    }
    CHECK_THROWS_AS(read_trace_csv(dir.file("range.csv"), 20), std::runtime_error);
}
