#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "renyicc/linalg.hpp"
#include "renyicc/spectra.hpp"

namespace renyicc {

/// Sign matrix of a two-party function. Entry 0 marks an input pair
/// outside the promise.
class Rectangle {
public:
    Rectangle(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t support_size() const { return support_; }
    bool full_support() const { return support_ == rows_ * cols_; }

    int operator()(std::size_t x, std::size_t y) const { return entries_[x * cols_ + y]; }
    const std::vector<std::int8_t>& entries() const { return entries_; }

    friend bool operator==(const Rectangle&, const Rectangle&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int8_t> entries_;
    std::size_t support_;
};

struct MarginalPair {
    SymMatrix phi_a; ///< marginal of the unsigned (support) state
    SymMatrix psi_a; ///< marginal of the signed state
    Spectrum phi_spectrum;
    Spectrum psi_spectrum;
};

inline constexpr int kMaxIpBits = 13;
inline constexpr std::int64_t kMaxCharacterField = 4096;

/// R[x][y] = (-1)^{popcount(x & y)}, 1 <= n <= 13.
Rectangle ip_rectangle(int n);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Legendre symbol (x | q) by Euler's criterion; q must be an odd prime.
int legendre(std::int64_t x, std::int64_t q);

/// R[x][y] = legendre(x - y mod q); zero diagonal. q odd prime <= 4096.
Rectangle qchar_rectangle(std::int64_t q);

/// Comma-separated integers in {-1, 0, 1}, one row per line.
Rectangle rectangle_from_csv(const std::filesystem::path& path);
void write_rectangle_csv(const std::filesystem::path& path, const Rectangle& r);

/// Marginals of the uniform-over-support states
///   phi = sum |x>|y>,  psi = sum R[x][y] |x>|y>  (normalized).
MarginalPair marginals(const Rectangle& r);

/// Spectrum of R R^T / (|X||Y|). Requires full support.
Spectrum function_spectrum(const Rectangle& r);

/// Spectrum of R^T R / (|X||Y|); same nonzero part as function_spectrum.
Spectrum function_spectrum_columns(const Rectangle& r);

} // namespace renyicc
