// Compares the parallel kernels against their serial reference twins and
// prints a timing table.  Exits nonzero if any pair disagrees, so this also
// doubles as a coarse integration check (run with --quick in ctest).
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gp/expansion.hpp"
#include "gp/graph.hpp"
#include "gp/numbertheory.hpp"
#include "gp/spectrum.hpp"
#include "gp/threads.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int mismatches = 0;

template <typename F>
auto timed(F&& f, double& out_seconds) {
    const auto start = Clock::now();
    auto result = f();
    out_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

void row(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-28s %10.3f ms %10.3f ms %7.2fx  %s\n", name, serial_s * 1e3,
                parallel_s * 1e3, serial_s / parallel_s, equal ? "match" : "MISMATCH");
    if (!equal) ++mismatches;
}

void bench_census(bool quick) {
    const std::int64_t N = quick ? 1500 : 6000;
    double ts = 0, tp = 0;
    const auto serial = timed([&] { return gp::census_serial(N); }, ts);
    const auto parallel = timed([&] { return gp::census(N); }, tp);
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
        equal = serial[i].N == parallel[i].N && serial[i].a_lower == parallel[i].a_lower &&
                serial[i].b_count == parallel[i].b_count &&
                serial[i].ratio == parallel[i].ratio;
    const std::string name = "census N=" + std::to_string(N);
    row(name.c_str(), ts, tp, equal);
}

void bench_gap_sweep(bool quick) {
    const std::int64_t hi = quick ? 300 : 800;
    const gp::KSelection all{gp::KSelection::Mode::All, 0};
    double ts = 0, tp = 0;
    const auto serial = timed([&] { return gp::sweep_spectral_gap_serial(4, hi, all); }, ts);
    const auto parallel = timed([&] { return gp::sweep_spectral_gap(4, hi, all); }, tp);
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
        const auto& a = serial[i];
        const auto& b = parallel[i];
        // the serial path recomputes each cosine instead of using the shared
        // table, so allow roundoff-level drift on the gap itself
        equal = a.n == b.n && a.k == b.k && a.ok == b.ok &&
                std::abs(a.gap - b.gap) <= 1e-9 && a.bound == b.bound;
    }
    const std::string name = "gap sweep 4.." + std::to_string(hi);
    row(name.c_str(), ts, tp, equal);
}

void bench_expansion(bool quick) {
    const auto p = quick ? gp::validate_params(9, 2) : gp::validate_params(12, 5);
    const auto g = gp::build_graph(p);
#ifdef _OPENMP
    const int hw = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    double ts = 0, tp = 0;
    const auto serial = timed([&] { return gp::expanding_constant_exact(g); }, ts);
#ifdef _OPENMP
    omp_set_num_threads(hw);
#endif
    const auto parallel = timed([&] { return gp::expanding_constant_exact(g); }, tp);
    const bool equal =
        serial.h == parallel.h && serial.witness_set == parallel.witness_set;
    const std::string name =
        "cut search P(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
    row(name.c_str(), ts, tp, equal);

    // sanity: the Gray-code walk agrees with plain per-subset recounting
    const auto q = gp::validate_params(10, 2);
    const auto gq = gp::build_graph(q);
    double tb = 0, tg = 0;
    const auto brute = timed([&] { return gp::expanding_constant_brute(gq); }, tb);
    const auto gray = timed([&] { return gp::expanding_constant_exact(gq); }, tg);
    row("brute vs gray P(10,2)", tb, tg,
        brute.h == gray.h && brute.witness_set == gray.witness_set);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::printf("workers: %lld%s\n", static_cast<long long>(gp::worker_count()),
                quick ? " (quick mode)" : "");
    std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");
    bench_census(quick);
    bench_gap_sweep(quick);
    bench_expansion(quick);
    if (mismatches) std::printf("%d kernel pair(s) disagreed\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
