// Wall-clock comparison of the OpenMP kernels against their serial
// references. Thread count follows OMP_NUM_THREADS.

#include "tsg/pieri.hpp"
#include "tsg/torus.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

template <typename F>
double seconds(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_pieri(int m, int n)
{
    tsg::Decomposition serial = tsg::Decomposition::unit(m);
    tsg::Decomposition parallel = serial;
    const double ts = seconds([&] {
        for (int k = 0; k < n; ++k)
            serial = tsg::pieri_step_serial(serial);
    });
    const double tp = seconds([&] {
        for (int k = 0; k < n; ++k)
            parallel = tsg::pieri_step(parallel);
    });
    std::printf("pieri       m=%d n=%-4d keys=%-8zu serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", m, n,
                parallel.mults.size(), ts, tp, ts / tp, serial.mults == parallel.mults ? "match" : "MISMATCH");
}

void bench_torus(const tsg::TorusWeights& w, int n)
{
    tsg::BigInt a, b;
    const double ts = seconds([&] { a = tsg::zero_weight_count_serial(w, n); });
    const double tp = seconds([&] { b = tsg::zero_weight_count(w, n); });
    std::string k;
    for (long x : w.k)
        k += (k.empty() ? "" : ",") + std::to_string(x);
    std::printf("zero-weight k=(%s) n=%-4d            serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", k.c_str(),
                n, ts, tp, ts / tp, a == b ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv)
{
    const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    std::printf("threads: %d\n", omp_get_max_threads());
    bench_pieri(3, 60 * scale);
    bench_pieri(4, 40 * scale);
    bench_pieri(5, 30 * scale);
    bench_torus({{2, -1}}, 400 * scale);
    bench_torus({{3, -1, -1, 2, -2}}, 200 * scale);
    return 0;
}
