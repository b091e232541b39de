#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "renyicc/spectra.hpp"

namespace renyicc {

/// Largest product spectrum embezzle_fidelity will build.
inline constexpr std::size_t kMaxProductSize = std::size_t{1} << 22;
/// Largest dimension probed by min_embezzle_dim.
inline constexpr std::size_t kMaxEmbezzleDim = std::size_t{1} << 20;

struct EmbezzleResult {
    std::size_t d = 0;
    double fidelity = 0.0;
    std::string target; ///< descriptor, e.g. "epr:2" or "file:<path>"
    std::size_t target_length = 0;
    std::optional<double> eps_target;
    /// Last failing probe of a dimension search (absent when d = 1).
    std::optional<std::size_t> predecessor_d;
    std::optional<double> predecessor_fidelity;
};

/// Thrown by min_embezzle_dim when no probe up to the cap reaches the
/// requested fidelity. Carries the best probe.
class EmbezzleCapExceeded : public std::runtime_error {
public:
    EmbezzleCapExceeded(const std::string& what, EmbezzleResult best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const EmbezzleResult& best() const { return best_; }

private:
    EmbezzleResult best_;
};

/// Schmidt spectrum of M(d): 1 / (H_d j) for j = 1..d.
Spectrum m_spectrum(std::size_t d);

/// Best zero-communication fidelity for turning M(d) into M(d) (x) target.
double embezzle_fidelity(std::size_t d, const Spectrum& target);

/// Smallest power of two d <= 2^20 with embezzle_fidelity > 1 - eps.
EmbezzleResult min_embezzle_dim(const Spectrum& target, double eps,
                                const std::string& descriptor = "spectrum");

} // namespace renyicc
