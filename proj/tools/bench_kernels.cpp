// Times the serial counter-array kernels against their OpenMP versions and
// a full detection run under both execution policies. Results differ only
// in wall time; the equality of outputs is covered by the test suite.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "efd/filter.hpp"
#include "efd/kernels.hpp"
#include "efd/traffic.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<uint32_t> random_counters(size_t m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> counters(m);
    for (uint32_t& c : counters) c = static_cast<uint32_t>(rng() % 8);
    return counters;
}

template <typename F>
double time_reps(size_t reps, F&& body) {
    auto start = Clock::now();
    for (size_t i = 0; i < reps; ++i) body();
    return seconds_since(start) / static_cast<double>(reps);
}

void bench_array_kernels(size_t m, size_t reps) {
    std::vector<uint32_t> base = random_counters(m, 42);
    std::vector<uint32_t> scratch = base;

    double t_dec_s = time_reps(reps, [&] {
        scratch = base;
        efd::kernels::decrement_positive_serial(scratch);
    });
    double t_dec_p = time_reps(reps, [&] {
        scratch = base;
        efd::kernels::decrement_positive_parallel(scratch);
    });
    double t_cnt_s = time_reps(reps, [&] { efd::kernels::count_nonnull_serial(base); });
    double t_cnt_p = time_reps(reps, [&] { efd::kernels::count_nonnull_parallel(base); });
    double t_hist_s = time_reps(reps, [&] { efd::kernels::value_histogram_serial(base); });
    double t_hist_p = time_reps(reps, [&] { efd::kernels::value_histogram_parallel(base); });

    std::printf("%10zu  decrement %9.2f / %9.2f us (x%.2f)  nonnull %9.2f / %9.2f us (x%.2f)  "
                "histogram %9.2f / %9.2f us (x%.2f)\n",
                m, t_dec_s * 1e6, t_dec_p * 1e6, t_dec_s / t_dec_p, t_cnt_s * 1e6, t_cnt_p * 1e6,
                t_cnt_s / t_cnt_p, t_hist_s * 1e6, t_hist_p * 1e6, t_hist_s / t_hist_p);
}

double bench_detection(size_t n_packets, uint32_t m, efd::ExecPolicy policy) {
    efd::FilterConfig config;
    config.variant = efd::Variant::SingleFilterChoice;
    config.m = m;
    config.exec = policy;
    efd::Filter filter(config);
    std::mt19937_64 rng(7);

    auto start = Clock::now();
    for (size_t i = 0; i < n_packets; ++i) filter.observe(efd::random_flow_key(rng));
    double elapsed = seconds_since(start);
    std::printf("  m=%-8u policy=%-8s  %8.1f ns/packet  (%" PRIu64 " refreshes)\n", m,
                policy == efd::ExecPolicy::Serial ? "serial" : "parallel",
                static_cast<double>(elapsed) / static_cast<double>(n_packets) * 1e9,
                filter.stats().refresh_count);
    return elapsed;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels fall back to serial\n");
#endif

    std::printf("\narray kernels, serial / parallel per pass:\n");
    const size_t max_log2 = quick ? 18 : 22;
    for (size_t log2m = 14; log2m <= max_log2; log2m += 2) {
        size_t m = size_t(1) << log2m;
        size_t reps = quick ? 20 : 200;
        bench_array_kernels(m, reps);
    }

    std::printf("\nend-to-end detection, size-1 mice stream:\n");
    const size_t packets = quick ? 200000 : 2000000;
    for (uint32_t m : {1u << 16, 1u << 20}) {
        bench_detection(packets, m, efd::ExecPolicy::Serial);
        bench_detection(packets, m, efd::ExecPolicy::Parallel);
    }
    return 0;
}
