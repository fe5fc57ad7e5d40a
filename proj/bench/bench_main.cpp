// Timing harness comparing the serial reference kernels against their
// OpenMP counterparts: the full 3^18 codeword sweep, orthogonality-graph
// construction and the 36-clique search.

#include <chrono>
#include <cstdio>

#include "f3had/ortho.hpp"
#include "f3had/tables.hpp"

using namespace f3had;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = Clock::now();
        f();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    const TernaryCode p36 = bundled_code("P36");
    const TernaryCode f168 = bundled_code("F36-168");

    std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

    uint64_t sink = 0;
    SweepOptions opt;
    const double sweep_s = time_ms([&] { sink += sweep_serial(p36, opt).we.a[36]; }, 1);
    const double sweep_p = time_ms([&] { sink += sweep_parallel(p36, opt).we.a[36]; }, 1);
    std::printf("%-34s %12.1f %12.1f %7.2fx\n", "weight sweep (3^18, P36)", sweep_s, sweep_p,
                sweep_s / sweep_p);

    SweepOptions collect;
    collect.collect_mask = uint64_t{1} << 36;
    const auto words = sweep_parallel(f168, collect).collected;
    const W1Split w1 = build_w1(words);
    const double gamma_s = time_ms([&] { sink += uint64_t(build_gamma_serial(w1.w10).nv); });
    const double gamma_p = time_ms([&] { sink += uint64_t(build_gamma(w1.w10).nv); });
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", "orthogonality graph (F36-168)", gamma_s, gamma_p,
                gamma_s / gamma_p);

    const OrthGraph g = build_gamma(w1.w10);
    const double cl_s = time_ms([&] { sink += find_cliques_of_size(g, 36, 1).size(); });
    const double cl_p = time_ms([&] { sink += find_cliques_of_size(g, 36, 0).size(); });
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", "36-clique search (F36-168)", cl_s, cl_p,
                cl_s / cl_p);

    std::printf("(checksum %llu)\n", static_cast<unsigned long long>(sink));
    return 0;
}
