#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace renyicc {

/// Dense row-major real matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    Matrix transposed() const;
    double frobenius_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Square symmetric matrix. Symmetry is checked at construction
/// (1e-12 relative to the largest entry) and the stored copy is exactly
/// symmetrized.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Matrix m);
    SymMatrix(std::size_t dim, std::vector<double> entries);

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(std::span<const double> diag);
    static SymMatrix all_ones(std::size_t n);
    /// |v><v|
    static SymMatrix projector(std::span<const double> v);

    std::size_t dim() const { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }

    double trace() const;

private:
    Matrix m_;
};

struct EigenDecomp {
    std::vector<double> eigenvalues; ///< descending
    Matrix eigenvectors;             ///< column i pairs with eigenvalues[i]
};

// Tolerances shared by the density-operator routines.
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-9;

/// Symmetric eigensolver (round-robin cyclic Jacobi).
/// Throws NumericalError if the off-diagonal norm does not fall below
/// 1e-12 * ||A||_F within 100 sweeps.
EigenDecomp eigh(const SymMatrix& a);

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, noise floor]
/// are clamped to zero; anything more negative throws InputError.
SymMatrix psd_sqrt(const SymMatrix& a);

/// Singular values (descending) by one-sided Jacobi. Accurate to
/// eps*||M|| in absolute terms, which the fidelity needs for rank-deficient
/// inputs.
std::vector<double> singular_values(const Matrix& m);

/// Throws InputError unless `rho` is a density operator within tolerance.
void require_density(const SymMatrix& rho, const char* what);

/// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), evaluated as the
/// trace norm of sqrt(rho) sqrt(sigma).
double fidelity(const SymMatrix& rho, const SymMatrix& sigma);

/// Tr_B with A-major composite indexing: (i_A, j_B) -> i * dim_b + j.
SymMatrix partial_trace_b(const SymMatrix& rho_ab, std::size_t dim_a, std::size_t dim_b);

/// Tr_A with the same convention.
SymMatrix partial_trace_a(const SymMatrix& rho_ab, std::size_t dim_a, std::size_t dim_b);

/// Pinching of rho_AB in the eigenbasis {|i_A>} of rho_A:
///   P(rho) = sum_i |i_A><i_A| (x) <i_A| rho |i_A>.
/// The result is expressed in the rotated basis, so it is block diagonal
/// with block i equal to <i_A| rho |i_A>.
SymMatrix pinch(const SymMatrix& rho_ab, std::size_t dim_a, std::size_t dim_b);

SymMatrix kron(const SymMatrix& a, const SymMatrix& b);

} // namespace renyicc
