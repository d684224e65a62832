// Wall-time comparison of the serial reference scans against the
// OpenMP-striped kernels, on the three heaviest exhaustive workloads.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dsr/enumerate.hpp"
#include "dsr/harness.hpp"
#include "dsr/matching.hpp"

using namespace dsr;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif
    std::printf("%-34s %13s %13s %9s\n", "workload", "serial", "openmp", "speedup");

    {
        std::uint64_t c1 = 0, c2 = 0;
        double ts = time_ms([&] {
            c1 = count_labeled(7, [](const Graph& g) { return is_connected(g); }, false);
        });
        double tp = time_ms([&] {
            c2 = count_labeled(7, [](const Graph& g) { return is_connected(g); }, true);
        });
        if (c1 != c2) std::printf("MISMATCH: %llu vs %llu\n", (unsigned long long)c1,
                                  (unsigned long long)c2);
        row("connected count, n=7", ts, tp);
    }

    {
        auto work = [](bool parallel) {
            Config cfg;
            cfg.parallel = parallel;
            return check_lemma_2_1(6, cfg);
        };
        CheckResult rs, rp;
        double ts = time_ms([&] { rs = work(false); });
        double tp = time_ms([&] { rp = work(true); });
        row("blossom vs deficiency, n<=6", ts, tp);
    }

    {
        auto work = [](bool parallel) {
            Config cfg;
            cfg.parallel = parallel;
            return check_edge_deletion(5, cfg);
        };
        CheckResult rs, rp;
        double ts = time_ms([&] { rs = work(false); });
        double tp = time_ms([&] { rp = work(true); });
        row("edge-deletion radii, n<=5", ts, tp);
    }

    {
        auto work = [](bool parallel) {
            Config cfg;
            cfg.parallel = parallel;
            return check_lemma_3_3(6, 2, 1, cfg);
        };
        CheckResult rs, rp;
        double ts = time_ms([&] { rs = work(false); });
        double tp = time_ms([&] { rp = work(true); });
        row("radius floor scan, n=6", ts, tp);
    }
    return 0;
}
