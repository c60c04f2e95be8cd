// Compares the serial reference kernels against the OpenMP ones and the
// indexed range query against the exhaustive scan. Also cross-checks that
// both routes agree on every run.

#include <chrono>
#include <cstdio>
#include <random>

#include "mono/generators.hpp"
#include "mono/geometry.hpp"
#include "mono/scan.hpp"

using namespace mono;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

SampledGraph random_graph(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    auto unit = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    std::vector<GraphPoint> pts(count);
    for (GraphPoint& p : pts) {
        p.x = {unit() * 20.0 - 10.0};
        p.y = {unit() * 20.0 - 10.0};
    }
    return SampledGraph(1, std::move(pts));
}

}  // namespace

int main() {
    std::printf("pair scans: serial reference vs OpenMP kernel\n");
    std::printf("%8s %8s %10s %10s %10s %8s\n", "points", "threads",
                "serial[s]", "parallel[s]", "speedup", "agree");
    for (std::size_t count : {2000, 5000, 10000}) {
        const SampledGraph g = random_graph(count, count);
        const std::vector<std::size_t> idx = all_indices(g.size());

        auto t0 = clock_type::now();
        const MonotoneScan serial = monotone_scan_serial(g, idx, 1e-9);
        const double serial_s = seconds_since(t0);

        for (int threads : {1, 2, 4, 8}) {
            t0 = clock_type::now();
            const MonotoneScan parallel = monotone_scan(g, idx, 1e-9, threads);
            const double parallel_s = seconds_since(t0);
            const bool agree = serial.min_margin == parallel.min_margin &&
                               serial.violation == parallel.violation &&
                               serial.pairs == parallel.pairs;
            std::printf("%8zu %8d %10.4f %10.4f %9.2fx %8s\n", count, threads,
                        serial_s, parallel_s, serial_s / parallel_s,
                        agree ? "yes" : "NO");
            if (!agree) return 1;
        }
    }

    std::printf("\nmodulus scans\n");
    for (std::size_t count : {2000, 5000}) {
        const SampledGraph g = random_graph(count, count + 7);
        const std::vector<std::size_t> idx = all_indices(g.size());
        auto t0 = clock_type::now();
        const ModulusScan serial = modulus_scan_serial(g, idx);
        const double serial_s = seconds_since(t0);
        t0 = clock_type::now();
        const ModulusScan parallel = modulus_scan(g, idx, 8);
        const double parallel_s = seconds_since(t0);
        const bool agree = serial.r_hat == parallel.r_hat &&
                           serial.attaining == parallel.attaining;
        std::printf("%8zu  serial %.4fs  parallel(8) %.4fs  %.2fx  %s\n",
                    count, serial_s, parallel_s, serial_s / parallel_s,
                    agree ? "agree" : "DISAGREE");
        if (!agree) return 1;
    }

    std::printf("\nrange queries: kd index vs exhaustive scan\n");
    for (std::size_t count : {20000, 50000}) {
        const SampledGraph g = random_graph(count, count + 99);
        const NeighborhoodSpec spec{{{0.0}, {0.0}}, 1.0};
        auto t0 = clock_type::now();
        std::size_t hits = 0;
        for (int rep = 0; rep < 200; ++rep)
            hits += range_query(g, spec).size();
        const double indexed_s = seconds_since(t0);
        t0 = clock_type::now();
        std::size_t scan_hits = 0;
        for (int rep = 0; rep < 200; ++rep)
            scan_hits += range_query_scan(g, spec).size();
        const double scan_s = seconds_since(t0);
        std::printf("%8zu  indexed %.4fs  scan %.4fs  %.2fx  %s\n", count,
                    indexed_s, scan_s, scan_s / indexed_s,
                    hits == scan_hits ? "agree" : "DISAGREE");
        if (hits != scan_hits) return 1;
    }
    return 0;
}
