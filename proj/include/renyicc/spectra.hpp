#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace renyicc {

inline constexpr double kRankThreshold = 1e-12;
inline constexpr double kNormTol = 1e-9;

/// Probability vector sorted in descending order. Entries in [-1e-12, 0)
/// are clamped to zero; the sum must be within 1e-9 of one.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> probs);

    /// Eigenvalues of a density operator: values in [-1e-10, 1e-12] are
    /// treated as zero before validation.
    static Spectrum from_eigenvalues(std::vector<double> eigenvalues);

    /// Rescales to unit sum; throws if the raw sum is more than `tol` from 1.
    static Spectrum normalized(std::vector<double> values, double tol = 1e-6);

    std::span<const double> probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    double largest() const { return probs_.front(); }

    /// Number of entries above the rank threshold.
    std::size_t rank() const;

private:
    std::vector<double> probs_;
};

/// Rényi order: a finite alpha >= 0 or infinity.
class Order {
public:
    static Order finite(double alpha);
    static Order infinity() { return Order(0.0, true); }
    /// Accepts a decimal number or "inf".
    static Order parse(std::string_view text);

    bool is_infinite() const { return inf_; }
    /// Only meaningful for finite orders.
    double value() const { return alpha_; }
    std::string to_string() const;

    friend bool operator==(const Order&, const Order&) = default;

private:
    Order(double alpha, bool inf) : alpha_(alpha), inf_(inf) {}
    double alpha_;
    bool inf_;
};

/// S_alpha in bits.
double renyi(const Spectrum& p, Order a);
inline double renyi(const Spectrum& p, double alpha) { return renyi(p, Order::finite(alpha)); }

/// True iff every prefix sum of p is >= the corresponding prefix sum of q
/// (minus 1e-10); the shorter spectrum is zero-padded.
bool majorizes(const Spectrum& p, const Spectrum& q);

/// Smallest m with p_1 + ... + p_m >= 1 - eps.
std::size_t eps_rank(const Spectrum& p, double eps);

Spectrum tensor(const Spectrum& p, const Spectrum& q);

/// Best overlap of two bipartite pure states with the given Schmidt spectra
/// under local unitaries: sum_j sqrt(p_j q_j) over the sorted entries.
double match_fidelity(const Spectrum& p, const Spectrum& q);

Spectrum uniform(std::size_t k);

/// Plain-text spectrum file: one decimal per line, any order, blank lines
/// ignored. Normalized on load.
Spectrum read_spectrum(const std::filesystem::path& path);
void write_spectrum(const std::filesystem::path& path, const Spectrum& p);

} // namespace renyicc
