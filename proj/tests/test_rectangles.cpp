#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <vector>

#include "doctest.h"

#include "renyicc/error.hpp"
#include "renyicc/rectangles.hpp"

using namespace renyicc;
using doctest::Approx;

namespace {

int brute_legendre(std::int64_t x, std::int64_t q) {
    if (x == 0) {
        return 0;
    }
    std::set<std::int64_t> squares;
    for (std::int64_t y = 1; y < q; ++y) {
        squares.insert(y * y % q);
    }
    return squares.count(x) ? 1 : -1;
}

std::filesystem::path scratch() {
    const auto dir = std::filesystem::temp_directory_path() / "renyicc_rect_test";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_text(const std::filesystem::path& p, const char* text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("inner product rectangle") {
    const Rectangle r1 = ip_rectangle(1);
    CHECK(r1 == Rectangle(2, 2, {1, 1, 1, -1}));
    const Rectangle r2 = ip_rectangle(2);
    // Hadamard: R R^T = 4 I
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t z = 0; z < 4; ++z) {
            int s = 0;
            for (std::size_t y = 0; y < 4; ++y) {
                s += r2(x, y) * r2(z, y);
            }
            CHECK(s == (x == z ? 4 : 0));
        }
    }
    CHECK(r2(3, 3) == 1);
    CHECK(r2(1, 3) == -1);
    CHECK_THROWS_AS(ip_rectangle(0), InputError);
    CHECK_THROWS_AS(ip_rectangle(14), InputError);
}

TEST_CASE("primality") {
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 101, 4093, 1000000007ULL, 18446744073709551557ULL};
    const std::vector<std::uint64_t> composites{0, 1, 4, 9, 561, 1105, 4097, 3215031751ULL};
    for (auto p : primes) {
        CHECK(is_prime(p));
    }
    for (auto c : composites) {
        CHECK_FALSE(is_prime(c));
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(0, 7) == 0);
    CHECK_THROWS_AS(legendre(-1, 7), InputError);
    CHECK_THROWS_AS(legendre(7, 7), InputError);
    for (std::int64_t q : {3, 5, 11, 13, 101}) {
        for (std::int64_t x = 0; x < q; ++x) {
            CHECK(legendre(x, q) == brute_legendre(x, q));
        }
    }
    CHECK_THROWS_AS(legendre(1, 9), InputError);
    CHECK_THROWS_AS(legendre(1, 2), InputError);
}

TEST_CASE("quadratic character rectangle") {
    const Rectangle r = qchar_rectangle(3);
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            const int expected = x == y ? 0 : ((x + 3 - y) % 3 == 1 ? 1 : -1);
            CHECK(r(x, y) == expected);
        }
    }
    CHECK(r.support_size() == 6);
    CHECK_FALSE(r.full_support());
    for (std::int64_t bad : {1, 2, 4, 9, 15, 4099}) {
        CHECK_THROWS_AS(qchar_rectangle(bad), InputError);
    }
}

TEST_CASE("rectangle validation") {
    CHECK_THROWS_AS(Rectangle(1, 2, {1}), InputError);
    CHECK_THROWS_AS(Rectangle(1, 1, {2}), InputError);
    CHECK_THROWS_AS(Rectangle(1, 2, {0, 0}), InputError);
    CHECK_THROWS_AS(Rectangle(0, 0, {}), InputError);
}

TEST_CASE("rectangle CSV") {
    const auto dir = scratch();
    const Rectangle r = qchar_rectangle(5);
    write_rectangle_csv(dir / "q5.csv", r);
    CHECK(rectangle_from_csv(dir / "q5.csv") == r);

    write_text(dir / "one.csv", "1\n");
    CHECK(rectangle_from_csv(dir / "one.csv") == Rectangle(1, 1, {1}));

    write_text(dir / "spaces.csv", " 1, -1\n-1 ,1 \n\n");
    CHECK(rectangle_from_csv(dir / "spaces.csv") == Rectangle(2, 2, {1, -1, -1, 1}));

    write_text(dir / "two.csv", "1,2\n");
    CHECK_THROWS_AS(rectangle_from_csv(dir / "two.csv"), InputError);
    write_text(dir / "ragged.csv", "1,1\n1\n");
    CHECK_THROWS_AS(rectangle_from_csv(dir / "ragged.csv"), InputError);
    write_text(dir / "empty.csv", "");
    CHECK_THROWS_AS(rectangle_from_csv(dir / "empty.csv"), InputError);
    write_text(dir / "zeros.csv", "0,0\n");
    CHECK_THROWS_AS(rectangle_from_csv(dir / "zeros.csv"), InputError);
    CHECK_THROWS_AS(rectangle_from_csv(dir / "nope.csv"), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("function spectra") {
    for (int n = 1; n <= 5; ++n) {
        const Spectrum s = function_spectrum(ip_rectangle(n));
        const double u = std::ldexp(1.0, -n);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s[i] == Approx(u).epsilon(1e-12));
        }
    }
    CHECK(function_spectrum(Rectangle(1, 1, {1}))[0] == Approx(1.0));
    const Spectrum ones = function_spectrum(Rectangle(2, 2, {1, 1, 1, 1}));
    CHECK(ones[0] == Approx(1.0));
    CHECK(ones[1] == Approx(0.0));
    CHECK_THROWS_AS(function_spectrum(qchar_rectangle(5)), InputError);

    const Rectangle wide(2, 3, {1, -1, 1, 1, 1, -1});
    const Spectrum rows = function_spectrum(wide);
    const Spectrum cols = function_spectrum_columns(wide);
    CHECK(cols.size() == 3);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(rows[i] == Approx(cols[i]).epsilon(1e-12));
    }
    CHECK(cols[2] == Approx(0.0));
}

TEST_CASE("quadratic character marginals match the closed forms") {
    for (std::int64_t q : {3, 7, 11}) {
        const auto m = marginals(qchar_rectangle(q));
        const double qd = static_cast<double>(q);
        CHECK(m.phi_a.trace() == Approx(1.0).epsilon(1e-12));
        CHECK(m.psi_a.trace() == Approx(1.0).epsilon(1e-12));
        CHECK(m.phi_spectrum[0] == Approx(1.0 - 1.0 / qd).epsilon(1e-12));
        for (std::size_t i = 1; i < m.phi_spectrum.size(); ++i) {
            CHECK(m.phi_spectrum[i] == Approx(1.0 / (qd * (qd - 1.0))).epsilon(1e-12));
        }
        for (std::size_t i = 0; i + 1 < m.psi_spectrum.size(); ++i) {
            CHECK(m.psi_spectrum[i] == Approx(1.0 / (qd - 1.0)).epsilon(1e-12));
        }
        CHECK(m.psi_spectrum[m.psi_spectrum.size() - 1] == Approx(0.0).epsilon(1e-12));
        CHECK(renyi(m.phi_spectrum, 0.5) == Approx(std::log2(4.0 - 4.0 / qd)).epsilon(1e-10));
    }
}

TEST_CASE("full-support marginal of the support state is pure") {
    const auto m = marginals(ip_rectangle(3));
    CHECK(m.phi_spectrum[0] == Approx(1.0));
    CHECK(m.phi_spectrum.rank() == 1);
    CHECK(m.psi_spectrum.rank() == 8);
}
