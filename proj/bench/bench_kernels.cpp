// Times the OpenMP kernels against their serial references and reports the
// largest deviation between the two.
//
//   OMP_NUM_THREADS=8 ./bench_kernels

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include <omp.h>

#include "renyicc/embezzle.hpp"
#include "renyicc/kernels.hpp"
#include "renyicc/random.hpp"
#include "renyicc/rectangles.hpp"

using namespace renyicc;
namespace chrono = std::chrono;

template <class F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = chrono::steady_clock::now();
        f();
        const auto t1 = chrono::steady_clock::now();
        best = std::min(best, chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

void report(const char* name, double serial_ms, double parallel_ms, double diff) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   max|diff| %.2e\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, diff);
}

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    for (std::int64_t q : {257, 1021}) {
        const Rectangle rect = qchar_rectangle(q);
        std::vector<double> data(rect.entries().begin(), rect.entries().end());
        const auto side = static_cast<std::size_t>(q);
        Matrix gs;
        Matrix gp;
        const double ts = time_ms([&] { gs = kernels::serial::gram(side, side, data, 1.0); });
        const double tp = time_ms([&] { gp = kernels::gram(side, side, data, 1.0); });
        char name[64];
        std::snprintf(name, sizeof name, "gram qchar q=%lld", static_cast<long long>(q));
        report(name, ts, tp, max_diff(gs.data(), gp.data()));
    }

    Rng rng(7);
    for (std::size_t n : {64, 128, 256}) {
        const Matrix a = random_density(n, rng).matrix();
        kernels::JacobiResult rs;
        kernels::JacobiResult rp;
        const double ts = time_ms([&] { rs = kernels::serial::jacobi_eigen(a); }, 1);
        const double tp = time_ms([&] { rp = kernels::jacobi_eigen(a); }, 1);
        char name[64];
        std::snprintf(name, sizeof name, "jacobi n=%zu (%d/%d sweeps)", n, rs.sweeps, rp.sweeps);
        report(name, ts, tp, max_diff(rs.decomp.eigenvalues, rp.decomp.eigenvalues));
    }

    {
        const Matrix a = random_density(300, rng).matrix();
        Matrix ms;
        Matrix mp;
        const double ts = time_ms([&] { ms = kernels::serial::matmul(a, a); });
        const double tp = time_ms([&] { mp = kernels::matmul(a, a); });
        report("matmul n=300", ts, tp, max_diff(ms.data(), mp.data()));
    }

    {
        const Spectrum m = m_spectrum(std::size_t{1} << 20);
        const Spectrum t = uniform(2);
        std::vector<double> ps;
        std::vector<double> pp;
        const double ts = time_ms([&] { ps = kernels::serial::outer_products(m.probs(), t.probs()); });
        const double tp = time_ms([&] { pp = kernels::outer_products(m.probs(), t.probs()); });
        report("outer_products 2^20 x 2", ts, tp, max_diff(ps, pp));

        std::sort(ps.begin(), ps.end(), std::greater<>());
        double fs = 0.0;
        double fp = 0.0;
        const double os = time_ms([&] { fs = kernels::serial::sqrt_overlap(m.probs(), ps); });
        const double op = time_ms([&] { fp = kernels::sqrt_overlap(m.probs(), ps); });
        report("sqrt_overlap 2^21", os, op, std::abs(fs - fp));
    }
    return 0;
}
