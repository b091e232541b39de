#include "renyicc/embezzle.hpp"

#include <vector>

#include "renyicc/error.hpp"

namespace renyicc {

Spectrum m_spectrum(std::size_t d) {
    if (d == 0) {
        throw InputError("M(d) needs d >= 1");
    }
    // harmonic number summed smallest-first
    double harmonic = 0.0;
    for (std::size_t j = d; j >= 1; --j) {
        harmonic += 1.0 / static_cast<double>(j);
    }
    std::vector<double> probs(d);
    for (std::size_t j = 1; j <= d; ++j) {
        probs[j - 1] = 1.0 / (harmonic * static_cast<double>(j));
    }
    return Spectrum(std::move(probs));
}

double embezzle_fidelity(std::size_t d, const Spectrum& target) {
    if (d == 0) {
        throw InputError("M(d) needs d >= 1");
    }
    if (d > kMaxProductSize / target.size()) {
        throw InputError("product spectrum of size " + std::to_string(d) + " x " +
                         std::to_string(target.size()) + " exceeds the cap 2^22");
    }
    const Spectrum catalyst = m_spectrum(d);
    return match_fidelity(catalyst, tensor(catalyst, target));
}

EmbezzleResult min_embezzle_dim(const Spectrum& target, double eps, const std::string& descriptor) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InputError("embezzlement search needs 0 < eps < 1");
    }
    EmbezzleResult best;
    best.target = descriptor;
    best.target_length = target.size();
    best.eps_target = eps;
    std::optional<std::size_t> prev_d;
    std::optional<double> prev_f;
    for (std::size_t d = 1; d <= kMaxEmbezzleDim; d *= 2) {
        if (d > kMaxProductSize / target.size()) {
            break;
        }
        const double f = embezzle_fidelity(d, target);
        if (f > best.fidelity || best.d == 0) {
            best.d = d;
            best.fidelity = f;
            best.predecessor_d = prev_d;
            best.predecessor_fidelity = prev_f;
        }
        if (f > 1.0 - eps) {
            EmbezzleResult found = best;
            found.d = d;
            found.fidelity = f;
            found.predecessor_d = prev_d;
            found.predecessor_fidelity = prev_f;
            return found;
        }
        prev_d = d;
        prev_f = f;
    }
    throw EmbezzleCapExceeded("no dimension up to the cap reaches fidelity > " +
                                  std::to_string(1.0 - eps),
                              best);
}

} // namespace renyicc
