#include "renyicc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "renyicc/error.hpp"

namespace renyicc::kernels {

namespace {

struct Rotation {
    std::size_t p;
    std::size_t q;
    double c;
    double s;
};

// Rotation that annihilates a(p, q). Returns false when already zero.
bool make_rotation(const Matrix& a, std::size_t p, std::size_t q, Rotation& rot) {
    const double apq = a(p, q);
    if (apq == 0.0) {
        return false;
    }
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    rot = {p, q, c, t * c};
    return true;
}

void rotate_columns(Matrix& m, const Rotation& r) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
        const double mp = m(k, r.p);
        const double mq = m(k, r.q);
        m(k, r.p) = r.c * mp - r.s * mq;
        m(k, r.q) = r.s * mp + r.c * mq;
    }
}

void rotate_rows(Matrix& m, const Rotation& r) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
        const double mp = m(r.p, k);
        const double mq = m(r.q, k);
        m(r.p, k) = r.c * mp - r.s * mq;
        m(r.q, k) = r.s * mp + r.c * mq;
    }
}

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += a(i, j) * a(i, j);
            }
        }
    }
    return std::sqrt(sum);
}

void require_square(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw InputError("eigensolver needs a square matrix");
    }
}

JacobiResult sorted_result(const Matrix& a, const Matrix& v, int sweeps) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    JacobiResult out;
    out.sweeps = sweeps;
    out.decomp.eigenvalues.resize(n);
    out.decomp.eigenvectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        out.decomp.eigenvalues[col] = a(order[col], order[col]);
        for (std::size_t k = 0; k < n; ++k) {
            out.decomp.eigenvectors(k, col) = v(k, order[col]);
        }
    }
    return out;
}

// Round-robin schedule on m (even) players: round r pairs position 0 with
// a rotating opponent and folds the rest.
std::vector<std::pair<std::size_t, std::size_t>> round_pairs(std::size_t m, std::size_t round) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(m / 2);
    auto player = [&](std::size_t pos) -> std::size_t {
        if (pos == 0) {
            return 0;
        }
        return 1 + (pos - 1 + round) % (m - 1);
    };
    for (std::size_t k = 0; k < m / 2; ++k) {
        std::size_t a = player(k);
        std::size_t b = player(m - 1 - k);
        if (a > b) {
            std::swap(a, b);
        }
        pairs.emplace_back(a, b);
    }
    return pairs;
}

} // namespace

Matrix gram(std::size_t rows, std::size_t cols, std::span<const double> a, double scale) {
    if (a.size() != rows * cols) {
        throw InputError("gram: data size does not match shape");
    }
    Matrix out(rows, rows);
    const auto n = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic)
    for (long long ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const double* ri = a.data() + i * cols;
        for (std::size_t j = i; j < rows; ++j) {
            const double* rj = a.data() + j * cols;
            double sum = 0.0;
            for (std::size_t k = 0; k < cols; ++k) {
                sum += ri[k] * rj[k];
            }
            out(i, j) = scale * sum;
        }
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            out(i, j) = out(j, i);
        }
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw InputError("matmul: inner dimensions differ");
    }
    Matrix out(a.rows(), b.cols());
    const auto n = static_cast<long long>(a.rows());
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

JacobiResult jacobi_eigen(const Matrix& input) {
    require_square(input);
    const std::size_t n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);
    const double norm = a.frobenius_norm();
    if (n < 2) {
        return sorted_result(a, v, 0);
    }
    const std::size_t m = n + (n % 2);
    for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kJacobiTol * norm) {
            return sorted_result(a, v, sweep);
        }
        if (sweep == kMaxJacobiSweeps) {
            break;
        }
        for (std::size_t round = 0; round + 1 < m; ++round) {
            std::vector<Rotation> rots;
            for (auto [p, q] : round_pairs(m, round)) {
                Rotation r{};
                if (q < n && make_rotation(a, p, q, r)) {
                    rots.push_back(r);
                }
            }
            if (rots.empty()) {
                continue;
            }
            const auto count = static_cast<long long>(rots.size());
#pragma omp parallel
            {
#pragma omp for schedule(static)
                for (long long k = 0; k < count; ++k) {
                    rotate_columns(a, rots[static_cast<std::size_t>(k)]);
                    rotate_columns(v, rots[static_cast<std::size_t>(k)]);
                }
#pragma omp for schedule(static)
                for (long long k = 0; k < count; ++k) {
                    const auto& r = rots[static_cast<std::size_t>(k)];
                    rotate_rows(a, r);
                    a(r.p, r.q) = 0.0;
                    a(r.q, r.p) = 0.0;
                }
            }
        }
    }
    throw NumericalError("Jacobi eigensolver did not converge within " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps");
}

std::vector<double> outer_products(std::span<const double> p, std::span<const double> q) {
    std::vector<double> out(p.size() * q.size());
    const auto n = static_cast<long long>(p.size());
    const std::size_t w = q.size();
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < w; ++j) {
            out[i * w + j] = p[i] * q[j];
        }
    }
    return out;
}

double sqrt_overlap(std::span<const double> p, std::span<const double> q) {
    constexpr std::size_t kBlock = 4096;
    const std::size_t len = std::min(p.size(), q.size());
    const std::size_t blocks = (len + kBlock - 1) / kBlock;
    std::vector<double> partial(blocks, 0.0);
    const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(static)
    for (long long bb = 0; bb < nb; ++bb) {
        const auto b = static_cast<std::size_t>(bb);
        const std::size_t end = std::min(len, (b + 1) * kBlock);
        double sum = 0.0;
        for (std::size_t j = b * kBlock; j < end; ++j) {
            sum += std::sqrt(p[j] * q[j]);
        }
        partial[b] = sum;
    }
    double total = 0.0;
    for (double s : partial) {
        total += s;
    }
    return total;
}

namespace serial {

Matrix gram(std::size_t rows, std::size_t cols, std::span<const double> a, double scale) {
    if (a.size() != rows * cols) {
        throw InputError("gram: data size does not match shape");
    }
    Matrix out(rows, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < rows; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < cols; ++k) {
                sum += a[i * cols + k] * a[j * cols + k];
            }
            out(i, j) = scale * sum;
        }
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw InputError("matmul: inner dimensions differ");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                sum += a(i, k) * b(k, j);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

JacobiResult jacobi_eigen(const Matrix& input) {
    require_square(input);
    const std::size_t n = input.rows();
    Matrix a = input;
    Matrix v = Matrix::identity(n);
    const double norm = a.frobenius_norm();
    for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kJacobiTol * norm) {
            return sorted_result(a, v, sweep);
        }
        if (sweep == kMaxJacobiSweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Rotation r{};
                if (!make_rotation(a, p, q, r)) {
                    continue;
                }
                rotate_columns(a, r);
                rotate_rows(a, r);
                rotate_columns(v, r);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    throw NumericalError("Jacobi eigensolver did not converge within " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps");
}

std::vector<double> outer_products(std::span<const double> p, std::span<const double> q) {
    std::vector<double> out;
    out.reserve(p.size() * q.size());
    for (double x : p) {
        for (double y : q) {
            out.push_back(x * y);
        }
    }
    return out;
}

double sqrt_overlap(std::span<const double> p, std::span<const double> q) {
    const std::size_t len = std::min(p.size(), q.size());
    double total = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        total += std::sqrt(p[j] * q[j]);
    }
    return total;
}

} // namespace serial

} // namespace renyicc::kernels
