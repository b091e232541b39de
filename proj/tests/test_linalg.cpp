#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "renyicc/error.hpp"
#include "renyicc/kernels.hpp"
#include "renyicc/linalg.hpp"
#include "renyicc/random.hpp"

using namespace renyicc;
using doctest::Approx;

namespace {

SymMatrix epr_projector() {
    const double h = std::sqrt(0.5);
    const std::vector<double> v{h, 0.0, 0.0, h};
    return SymMatrix::projector(v);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    }
    return d;
}

} // namespace

TEST_CASE("eigh on small closed forms") {
    const auto e = eigh(SymMatrix(2, {2, 1, 1, 2}));
    CHECK(e.eigenvalues[0] == Approx(3.0).epsilon(1e-14));
    CHECK(e.eigenvalues[1] == Approx(1.0).epsilon(1e-14));

    const std::vector<double> d{5, 2, 7};
    const auto f = eigh(SymMatrix::diagonal(d));
    CHECK(f.eigenvalues == std::vector<double>{7, 5, 2});
    // column 0 is e_3 up to sign
    CHECK(std::abs(f.eigenvectors(2, 0)) == Approx(1.0));

    const auto g = eigh(SymMatrix::identity(5));
    for (double x : g.eigenvalues) {
        CHECK(x == Approx(1.0));
    }
}

TEST_CASE("eigh agrees with the characteristic polynomial on 3x3") {
    Rng rng(11);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        std::array<double, 9> m{};
        for (int i = 0; i < 3; ++i) {
            for (int j = i; j < 3; ++j) {
                m[3 * i + j] = m[3 * j + i] = n(rng);
            }
        }
        const auto roots = oracle::eig3(m);
        const auto e = eigh(SymMatrix(3, std::vector<double>(m.begin(), m.end())));
        for (int k = 0; k < 3; ++k) {
            CHECK(e.eigenvalues[k] == Approx(roots[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("eigenvectors reconstruct the matrix") {
    const SymMatrix a = random_density(17, 5);
    const auto e = eigh(a);
    Matrix d(17, 17);
    for (std::size_t i = 0; i < 17; ++i) {
        d(i, i) = e.eigenvalues[i];
    }
    const Matrix back = e.eigenvectors * d * e.eigenvectors.transposed();
    CHECK(max_abs_diff(back, a.matrix()) < 1e-13);
    const Matrix gram = e.eigenvectors.transposed() * e.eigenvectors;
    CHECK(max_abs_diff(gram, Matrix::identity(17)) < 1e-12);
}

TEST_CASE("symmetric matrix validation") {
    CHECK_THROWS_AS(SymMatrix(2, {1, 0.5, 0.4, 1}), InputError);
    CHECK_THROWS_AS(SymMatrix(Matrix(2, 3)), InputError);
    CHECK_NOTHROW(SymMatrix(2, {1, 0.5, 0.5 + 1e-14, 1}));
}

TEST_CASE("psd_sqrt") {
    const std::vector<double> d{4, 9};
    const SymMatrix r = psd_sqrt(SymMatrix::diagonal(d));
    CHECK(r(0, 0) == Approx(2.0));
    CHECK(r(1, 1) == Approx(3.0));
    CHECK(r(0, 1) == Approx(0.0));

    const SymMatrix i = psd_sqrt(SymMatrix::identity(3));
    CHECK(max_abs_diff(i.matrix(), Matrix::identity(3)) < 1e-15);

    const SymMatrix a = random_density(6, 3);
    const SymMatrix s = psd_sqrt(a);
    CHECK(max_abs_diff(s.matrix() * s.matrix(), a.matrix()) < 1e-13);

    CHECK_THROWS_AS(psd_sqrt(SymMatrix(2, {0, 1, 1, 0})), InputError);
}

TEST_CASE("fidelity examples") {
    const SymMatrix rho = random_density(4, 9);
    CHECK(fidelity(rho, rho) == Approx(1.0).epsilon(1e-10));

    const std::vector<double> u{1, 0};
    const std::vector<double> v{0, 1};
    CHECK(fidelity(SymMatrix::projector(u), SymMatrix::projector(v)) == Approx(0.0).epsilon(1e-12));

    const std::vector<double> a{1, 0};
    const std::vector<double> b{0.5, 0.5};
    CHECK(fidelity(SymMatrix::diagonal(a), SymMatrix::diagonal(b)) ==
          Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("fidelity of commuting states is the classical overlap") {
    Rng rng(3);
    const auto p = random_spectrum(5, rng);
    const auto q = random_spectrum(5, rng);
    std::vector<double> pd(p.probs().begin(), p.probs().end());
    std::vector<double> qd(q.probs().begin(), q.probs().end());
    double expected = 0.0;
    for (int i = 0; i < 5; ++i) {
        expected += std::sqrt(pd[i] * qd[i]);
    }
    CHECK(fidelity(SymMatrix::diagonal(pd), SymMatrix::diagonal(qd)) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("fidelity rejects non-density inputs") {
    const std::vector<double> bad{0.7, 0.7};
    const std::vector<double> ok{0.5, 0.5};
    CHECK_THROWS_AS(fidelity(SymMatrix::diagonal(bad), SymMatrix::diagonal(ok)), InputError);
    CHECK_THROWS_AS(fidelity(SymMatrix::identity(2), SymMatrix::identity(3)), InputError);
}

TEST_CASE("partial traces") {
    const SymMatrix pa = random_density(2, 1);
    const SymMatrix pb = random_density(3, 2);
    const SymMatrix ab = kron(pa, pb);
    CHECK(max_abs_diff(partial_trace_b(ab, 2, 3).matrix(), pa.matrix()) < 1e-15);
    CHECK(max_abs_diff(partial_trace_a(ab, 2, 3).matrix(), pb.matrix()) < 1e-15);

    const SymMatrix half = partial_trace_b(epr_projector(), 2, 2);
    CHECK(half(0, 0) == Approx(0.5));
    CHECK(half(1, 1) == Approx(0.5));
    CHECK(half(0, 1) == Approx(0.0));

    CHECK_THROWS_AS(partial_trace_b(SymMatrix::identity(5), 2, 2), InputError);
}

TEST_CASE("pinching") {
    const SymMatrix p = pinch(epr_projector(), 2, 2);
    const std::vector<double> expected{0.5, 0, 0, 0.5};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(p(i, j) == Approx(i == j ? expected[i] : 0.0).epsilon(1e-12));
        }
    }

    // product state: the pinched state has the same spectrum
    const SymMatrix prod = kron(random_density(2, 4), random_density(2, 5));
    const auto before = eigh(prod).eigenvalues;
    const auto after = eigh(pinch(prod, 2, 2)).eigenvalues;
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(after[i] == Approx(before[i]).epsilon(1e-12));
    }
}

TEST_CASE("singular values of a known matrix") {
    // [[3,0],[4,5]] has singular values sqrt(45), sqrt(5)
    const auto s = singular_values(Matrix(2, 2, {3, 0, 4, 5}));
    CHECK(s[0] == Approx(std::sqrt(45.0)));
    CHECK(s[1] == Approx(std::sqrt(5.0)));
}

TEST_CASE("parallel kernels match the serial references") {
    Rng rng(21);
    const Matrix a = random_density(40, rng).matrix();
    const Matrix b = random_density(40, rng).matrix();
    CHECK(max_abs_diff(kernels::matmul(a, b), kernels::serial::matmul(a, b)) < 1e-15);

    std::vector<double> raw(30 * 50);
    std::normal_distribution<double> n(0.0, 1.0);
    for (double& x : raw) {
        x = n(rng);
    }
    CHECK(max_abs_diff(kernels::gram(30, 50, raw, 0.25), kernels::serial::gram(30, 50, raw, 0.25)) < 1e-13);

    const auto jp = kernels::jacobi_eigen(a);
    const auto js = kernels::serial::jacobi_eigen(a);
    for (std::size_t i = 0; i < 40; ++i) {
        CHECK(jp.decomp.eigenvalues[i] == Approx(js.decomp.eigenvalues[i]).epsilon(1e-12));
    }
    CHECK(jp.sweeps <= kernels::kMaxJacobiSweeps);

    const auto p = random_spectrum(5000, rng);
    const auto q = random_spectrum(3000, rng);
    CHECK(kernels::outer_products(p.probs(), q.probs()) == kernels::serial::outer_products(p.probs(), q.probs()));
    CHECK(kernels::sqrt_overlap(p.probs(), q.probs()) ==
          Approx(kernels::serial::sqrt_overlap(p.probs(), q.probs())).epsilon(1e-13));
}
