#include "renyicc/rectangles.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "renyicc/error.hpp"
#include "renyicc/kernels.hpp"

namespace renyicc {

Rectangle::Rectangle(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), support_(0) {
    if (rows_ == 0 || cols_ == 0) {
        throw InputError("rectangle must have at least one row and one column");
    }
    if (entries_.size() != rows_ * cols_) {
        throw InputError("rectangle entry count does not match its shape");
    }
    for (std::int8_t e : entries_) {
        if (e < -1 || e > 1) {
            throw InputError("rectangle entries must be -1, 0 or 1");
        }
        support_ += e != 0;
    }
    if (support_ == 0) {
        throw InputError("rectangle has empty support");
    }
}

Rectangle ip_rectangle(int n) {
    if (n < 1 || n > kMaxIpBits) {
        throw InputError("inner product needs 1 <= n <= " + std::to_string(kMaxIpBits));
    }
    const std::size_t side = std::size_t{1} << n;
    std::vector<std::int8_t> entries(side * side);
    for (std::size_t x = 0; x < side; ++x) {
        for (std::size_t y = 0; y < side; ++y) {
            entries[x * side + y] = (std::popcount(x & y) % 2 == 0) ? 1 : -1;
        }
    }
    return Rectangle(side, side, std::move(entries));
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

void require_odd_prime(std::int64_t q) {
    if (q < 3 || q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(q))) {
        throw InputError("q = " + std::to_string(q) + " is not an odd prime");
    }
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // these bases are exact for n < 2^64
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

int legendre(std::int64_t x, std::int64_t q) {
    require_odd_prime(q);
    if (x < 0 || x >= q) {
        throw InputError("legendre: x must lie in [0, q)");
    }
    if (x == 0) {
        return 0;
    }
    const auto uq = static_cast<std::uint64_t>(q);
    const std::uint64_t e = pow_mod(static_cast<std::uint64_t>(x), (uq - 1) / 2, uq);
    return e == 1 ? 1 : -1;
}

Rectangle qchar_rectangle(std::int64_t q) {
    require_odd_prime(q);
    if (q > kMaxCharacterField) {
        throw InputError("quadratic character rectangle needs q <= " +
                         std::to_string(kMaxCharacterField));
    }
    std::vector<std::int8_t> chi(static_cast<std::size_t>(q));
    for (std::int64_t d = 0; d < q; ++d) {
        chi[static_cast<std::size_t>(d)] = static_cast<std::int8_t>(legendre(d, q));
    }
    const auto side = static_cast<std::size_t>(q);
    std::vector<std::int8_t> entries(side * side);
    for (std::size_t x = 0; x < side; ++x) {
        for (std::size_t y = 0; y < side; ++y) {
            entries[x * side + y] = chi[(x + side - y) % side];
        }
    }
    return Rectangle(side, side, std::move(entries));
}

Rectangle rectangle_from_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open rectangle file " + path.string());
    }
    std::vector<std::int8_t> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::size_t count = 0;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t");
            const auto last = cell.find_last_not_of(" \t");
            if (first == std::string::npos) {
                throw InputError(path.string() + ":" + std::to_string(lineno) + ": empty cell");
            }
            const std::string_view token(cell.data() + first, last - first + 1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || value < -1 || value > 1) {
                throw InputError(path.string() + ":" + std::to_string(lineno) + ": entry '" +
                                 std::string(token) + "' is not -1, 0 or 1");
            }
            entries.push_back(static_cast<std::int8_t>(value));
            ++count;
        }
        if (rows == 0) {
            cols = count;
        } else if (count != cols) {
            throw InputError(path.string() + ":" + std::to_string(lineno) + ": ragged row (" +
                             std::to_string(count) + " entries, expected " +
                             std::to_string(cols) + ")");
        }
        ++rows;
    }
    if (rows == 0) {
        throw InputError("rectangle file " + path.string() + " is empty");
    }
    return Rectangle(rows, cols, std::move(entries));
}

void write_rectangle_csv(const std::filesystem::path& path, const Rectangle& r) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write rectangle file " + path.string());
    }
    for (std::size_t x = 0; x < r.rows(); ++x) {
        for (std::size_t y = 0; y < r.cols(); ++y) {
            out << (y ? "," : "") << r(x, y);
        }
        out << '\n';
    }
}

namespace {

std::vector<double> as_doubles(const Rectangle& r, bool absolute) {
    std::vector<double> out(r.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int e = r.entries()[i];
        out[i] = absolute ? (e != 0 ? 1.0 : 0.0) : static_cast<double>(e);
    }
    return out;
}

std::vector<double> transposed(const Rectangle& r) {
    std::vector<double> out(r.rows() * r.cols());
    for (std::size_t x = 0; x < r.rows(); ++x) {
        for (std::size_t y = 0; y < r.cols(); ++y) {
            out[y * r.rows() + x] = r(x, y);
        }
    }
    return out;
}

Spectrum spectrum_of(const Matrix& m) {
    return Spectrum::from_eigenvalues(eigh(SymMatrix(m)).eigenvalues);
}

void require_full_support(const Rectangle& r) {
    if (!r.full_support()) {
        throw InputError("function spectrum needs a full-support rectangle; "
                         "use the promise route for rectangles with 0 entries");
    }
}

} // namespace

MarginalPair marginals(const Rectangle& r) {
    const double scale = 1.0 / static_cast<double>(r.support_size());
    Matrix phi = kernels::gram(r.rows(), r.cols(), as_doubles(r, true), scale);
    Matrix psi = kernels::gram(r.rows(), r.cols(), as_doubles(r, false), scale);
    Spectrum phi_spec = spectrum_of(phi);
    Spectrum psi_spec = spectrum_of(psi);
    return {SymMatrix(std::move(phi)), SymMatrix(std::move(psi)), std::move(phi_spec),
            std::move(psi_spec)};
}

Spectrum function_spectrum(const Rectangle& r) {
    require_full_support(r);
    const double scale = 1.0 / static_cast<double>(r.rows() * r.cols());
    return spectrum_of(kernels::gram(r.rows(), r.cols(), as_doubles(r, false), scale));
}

Spectrum function_spectrum_columns(const Rectangle& r) {
    require_full_support(r);
    const double scale = 1.0 / static_cast<double>(r.rows() * r.cols());
    return spectrum_of(kernels::gram(r.cols(), r.rows(), transposed(r), scale));
}

} // namespace renyicc
