#pragma once

// Data-parallel inner loops. The default namespace holds the OpenMP
// versions used by the library; `serial` holds plain reference versions
// used by tests and the benchmark. Every parallel kernel writes disjoint
// outputs per thread (no floating-point reductions whose order depends on
// the thread count), so results are identical for any OMP_NUM_THREADS.

#include <cstddef>
#include <span>
#include <vector>

#include "renyicc/linalg.hpp"

namespace renyicc::kernels {

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiTol = 1e-12;

struct JacobiResult {
    EigenDecomp decomp;
    int sweeps = 0;
};

/// scale * A * A^T for a rows x cols row-major A.
Matrix gram(std::size_t rows, std::size_t cols, std::span<const double> a, double scale);

Matrix matmul(const Matrix& a, const Matrix& b);

/// Jacobi eigensolver with round-robin pair ordering: each round applies
/// n/2 disjoint rotations at once. Throws NumericalError past the sweep cap.
JacobiResult jacobi_eigen(const Matrix& a);

/// All products p_i * q_j in row-major (i, j) order, unsorted.
std::vector<double> outer_products(std::span<const double> p, std::span<const double> q);

/// sum_j sqrt(p_j * q_j), the shorter input treated as zero-padded.
/// Blocked reduction with a fixed block size.
double sqrt_overlap(std::span<const double> p, std::span<const double> q);

/// Calls f(i) for i in [0, n) across threads. f must only write to
/// index-owned storage.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        f(static_cast<std::size_t>(i));
    }
}

namespace serial {

Matrix gram(std::size_t rows, std::size_t cols, std::span<const double> a, double scale);
Matrix matmul(const Matrix& a, const Matrix& b);
/// Classic cyclic-by-row Jacobi, one rotation at a time.
JacobiResult jacobi_eigen(const Matrix& a);
std::vector<double> outer_products(std::span<const double> p, std::span<const double> q);
double sqrt_overlap(std::span<const double> p, std::span<const double> q);

} // namespace serial

} // namespace renyicc::kernels
