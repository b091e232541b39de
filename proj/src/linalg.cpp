#include "renyicc/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "renyicc/error.hpp"
#include "renyicc/kernels.hpp"

namespace renyicc {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw InputError("matrix data has " + std::to_string(data_.size()) +
                         " entries, expected " + std::to_string(rows_ * cols_));
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

double Matrix::frobenius_norm() const {
    double sum = 0.0;
    for (double x : data_) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::matmul(a, b); }

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("matrix difference: shape mismatch");
    }
    Matrix out = a;
    auto od = out.data();
    auto bd = b.data();
    for (std::size_t i = 0; i < od.size(); ++i) {
        od[i] -= bd[i];
    }
    return out;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw InputError("symmetric matrix must be square");
    }
    if (m_.rows() == 0) {
        throw InputError("symmetric matrix must have dim >= 1");
    }
    double scale = 0.0;
    for (double x : m_.data()) {
        scale = std::max(scale, std::abs(x));
    }
    const std::size_t n = m_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = m_(i, j);
            const double b = m_(j, i);
            if (std::abs(a - b) > kSymmetryTol * scale) {
                throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            }
            const double mid = 0.5 * (a + b);
            m_(i, j) = mid;
            m_(j, i) = mid;
        }
    }
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<double> entries)
    : SymMatrix(Matrix(dim, dim, std::move(entries))) {}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::all_ones(std::size_t n) { return SymMatrix(Matrix(n, n, 1.0)); }

SymMatrix SymMatrix::projector(std::span<const double> v) {
    Matrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * v[j];
        }
    }
    return SymMatrix(std::move(m));
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        t += m_(i, i);
    }
    return t;
}

EigenDecomp eigh(const SymMatrix& a) { return kernels::jacobi_eigen(a.matrix()).decomp; }

namespace {

// Positive eigenvalues this small relative to the largest are Jacobi
// round-off on a rank-deficient input.
double noise_floor(std::span<const double> eigenvalues) {
    double top = 0.0;
    for (double x : eigenvalues) {
        top = std::max(top, std::abs(x));
    }
    return 64.0 * DBL_EPSILON * top;
}

} // namespace

SymMatrix psd_sqrt(const SymMatrix& a) {
    const EigenDecomp ed = eigh(a);
    const double floor = noise_floor(ed.eigenvalues);
    const std::size_t n = a.dim();
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = ed.eigenvalues[i];
        if (lam < -kPsdTol) {
            throw InputError("matrix is not PSD: eigenvalue " + std::to_string(lam));
        }
        roots[i] = lam <= floor ? 0.0 : std::sqrt(lam);
    }
    // V diag(roots) V^T
    Matrix scaled = ed.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            scaled(k, i) *= roots[i];
        }
    }
    Matrix out = kernels::matmul(scaled, ed.eigenvectors.transposed());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double mid = 0.5 * (out(i, j) + out(j, i));
            out(i, j) = mid;
            out(j, i) = mid;
        }
    }
    return SymMatrix(std::move(out));
}

std::vector<double> singular_values(const Matrix& input) {
    Matrix a = input;
    const std::size_t cols = a.cols();
    const std::size_t rows = a.rows();
    constexpr int kMaxSweeps = 100;
    constexpr double kTol = 1e-15;
    bool converged = cols < 2;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i + 1 < cols; ++i) {
            for (std::size_t j = i + 1; j < cols; ++j) {
                double alpha = 0.0;
                double beta = 0.0;
                double gamma = 0.0;
                for (std::size_t k = 0; k < rows; ++k) {
                    alpha += a(k, i) * a(k, i);
                    beta += a(k, j) * a(k, j);
                    gamma += a(k, i) * a(k, j);
                }
                if (gamma == 0.0 || std::abs(gamma) <= kTol * std::sqrt(alpha * beta)) {
                    continue;
                }
                converged = false;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < rows; ++k) {
                    const double ai = a(k, i);
                    const double aj = a(k, j);
                    a(k, i) = c * ai - s * aj;
                    a(k, j) = s * ai + c * aj;
                }
            }
        }
    }
    if (!converged) {
        throw NumericalError("one-sided Jacobi SVD did not converge");
    }
    std::vector<double> sv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double norm = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
            norm += a(k, j) * a(k, j);
        }
        sv[j] = std::sqrt(norm);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

void require_density(const SymMatrix& rho, const char* what) {
    if (std::abs(rho.trace() - 1.0) > kTraceTol) {
        throw InputError(std::string(what) + ": trace " + std::to_string(rho.trace()) +
                         " is not 1");
    }
    const EigenDecomp ed = eigh(rho);
    if (ed.eigenvalues.back() < -kPsdTol) {
        throw InputError(std::string(what) + ": not positive semidefinite");
    }
}

double fidelity(const SymMatrix& rho, const SymMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw InputError("fidelity: dimension mismatch");
    }
    for (const SymMatrix* m : {&rho, &sigma}) {
        if (std::abs(m->trace() - 1.0) > kTraceTol) {
            throw InputError("fidelity: input is not a density operator (trace " +
                             std::to_string(m->trace()) + ")");
        }
    }
    // psd_sqrt rejects non-PSD input
    const SymMatrix rho_root = psd_sqrt(rho);
    const SymMatrix sigma_root = psd_sqrt(sigma);
    const Matrix product = kernels::matmul(rho_root.matrix(), sigma_root.matrix());
    double f = 0.0;
    for (double s : singular_values(product)) {
        f += s;
    }
    return std::clamp(f, 0.0, 1.0);
}

namespace {

void require_factorization(const SymMatrix& rho_ab, std::size_t dim_a, std::size_t dim_b) {
    if (dim_a == 0 || dim_b == 0 || rho_ab.dim() != dim_a * dim_b) {
        throw InputError("composite dimension " + std::to_string(rho_ab.dim()) +
                         " does not factor as " + std::to_string(dim_a) + " x " +
                         std::to_string(dim_b));
    }
}

} // namespace

SymMatrix partial_trace_b(const SymMatrix& rho_ab, std::size_t dim_a, std::size_t dim_b) {
    require_factorization(rho_ab, dim_a, dim_b);
    Matrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t ip = 0; ip < dim_a; ++ip) {
            double sum = 0.0;
            for (std::size_t j = 0; j < dim_b; ++j) {
                sum += rho_ab(i * dim_b + j, ip * dim_b + j);
            }
            out(i, ip) = sum;
        }
    }
    return SymMatrix(std::move(out));
}

SymMatrix partial_trace_a(const SymMatrix& rho_ab, std::size_t dim_a, std::size_t dim_b) {
    require_factorization(rho_ab, dim_a, dim_b);
    Matrix out(dim_b, dim_b);
    for (std::size_t j = 0; j < dim_b; ++j) {
        for (std::size_t jp = 0; jp < dim_b; ++jp) {
            double sum = 0.0;
            for (std::size_t i = 0; i < dim_a; ++i) {
                sum += rho_ab(i * dim_b + j, i * dim_b + jp);
            }
            out(j, jp) = sum;
        }
    }
    return SymMatrix(std::move(out));
}

SymMatrix pinch(const SymMatrix& rho_ab, std::size_t dim_a, std::size_t dim_b) {
    const SymMatrix rho_a = partial_trace_b(rho_ab, dim_a, dim_b);
    const Matrix& u = eigh(rho_a).eigenvectors;
    Matrix out(dim_a * dim_b, dim_a * dim_b);
    for (std::size_t i = 0; i < dim_a; ++i) {
        // block_i[j][j'] = sum_{a,a'} u[a][i] u[a'][i] rho[(a,j),(a',j')]
        for (std::size_t j = 0; j < dim_b; ++j) {
            for (std::size_t jp = 0; jp < dim_b; ++jp) {
                double sum = 0.0;
                for (std::size_t a = 0; a < dim_a; ++a) {
                    double inner = 0.0;
                    for (std::size_t ap = 0; ap < dim_a; ++ap) {
                        inner += u(ap, i) * rho_ab(a * dim_b + j, ap * dim_b + jp);
                    }
                    sum += u(a, i) * inner;
                }
                out(i * dim_b + j, i * dim_b + jp) = sum;
            }
        }
    }
    return SymMatrix(std::move(out));
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    Matrix out(na * nb, na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t ip = 0; ip < na; ++ip) {
            for (std::size_t j = 0; j < nb; ++j) {
                for (std::size_t jp = 0; jp < nb; ++jp) {
                    out(i * nb + j, ip * nb + jp) = a(i, ip) * b(j, jp);
                }
            }
        }
    }
    return SymMatrix(std::move(out));
}

} // namespace renyicc
