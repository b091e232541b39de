#include "renyicc/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "renyicc/error.hpp"
#include "renyicc/kernels.hpp"
#include "renyicc/linalg.hpp"

namespace renyicc {

namespace {

constexpr double kNegativeTol = 1e-12;
constexpr double kMajorizationTol = 1e-10;
constexpr double kEpsRankTol = 1e-12;

double checked_sum(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) {
        sum += x;
    }
    return sum;
}

} // namespace

Spectrum::Spectrum(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw InputError("spectrum must have at least one entry");
    }
    for (double& x : probs_) {
        if (!std::isfinite(x)) {
            throw InputError("spectrum entry is not finite");
        }
        if (x < 0.0) {
            if (x < -kNegativeTol) {
                throw InputError("spectrum entry " + std::to_string(x) + " is negative");
            }
            x = 0.0;
        }
    }
    const double sum = checked_sum(probs_);
    if (std::abs(sum - 1.0) > kNormTol) {
        throw InputError("spectrum sums to " + std::to_string(sum) + ", not 1");
    }
    std::sort(probs_.begin(), probs_.end(), std::greater<>());
}

Spectrum Spectrum::from_eigenvalues(std::vector<double> eigenvalues) {
    for (double& x : eigenvalues) {
        if (x < -kPsdTol) {
            throw InputError("eigenvalue " + std::to_string(x) + " is negative");
        }
        if (x <= kRankThreshold) {
            x = 0.0;
        }
    }
    return Spectrum(std::move(eigenvalues));
}

Spectrum Spectrum::normalized(std::vector<double> values, double tol) {
    if (values.empty()) {
        throw InputError("spectrum must have at least one entry");
    }
    for (double x : values) {
        if (!std::isfinite(x) || x < 0.0) {
            throw InputError("spectrum entries must be finite and non-negative");
        }
    }
    const double sum = checked_sum(values);
    if (std::abs(sum - 1.0) > tol) {
        throw InputError("spectrum sums to " + std::to_string(sum) +
                         ", more than " + std::to_string(tol) + " from 1");
    }
    for (double& x : values) {
        x /= sum;
    }
    return Spectrum(std::move(values));
}

std::size_t Spectrum::rank() const {
    return static_cast<std::size_t>(
        std::count_if(probs_.begin(), probs_.end(), [](double x) { return x > kRankThreshold; }));
}

Order Order::finite(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw InputError("Renyi order must be a finite non-negative number or inf");
    }
    return Order(alpha, false);
}

Order Order::parse(std::string_view text) {
    if (text == "inf" || text == "INF" || text == "infinity") {
        return infinity();
    }
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw InputError("cannot parse Renyi order '" + std::string(text) + "'");
    }
    return finite(value);
}

std::string Order::to_string() const {
    if (inf_) {
        return "inf";
    }
    std::ostringstream out;
    out.precision(12);
    out << alpha_;
    return out.str();
}

double renyi(const Spectrum& p, Order a) {
    const auto probs = p.probs();
    if (a.is_infinite()) {
        return -std::log2(p.largest());
    }
    const double alpha = a.value();
    if (alpha == 0.0) {
        return std::log2(static_cast<double>(p.rank()));
    }
    if (alpha == 1.0) {
        double h = 0.0;
        for (double x : probs) {
            if (x > 0.0) {
                h -= x * std::log2(x);
            }
        }
        return h;
    }
    // log2 sum x^a = a log2 x_max + log2 sum (x / x_max)^a, safe for large a
    const double top = p.largest();
    double sum = 0.0;
    for (double x : probs) {
        if (x > 0.0) {
            sum += std::pow(x / top, alpha);
        }
    }
    const double log_sum = alpha * std::log2(top) + std::log2(sum);
    return std::max(0.0, log_sum / (1.0 - alpha));
}

bool majorizes(const Spectrum& p, const Spectrum& q) {
    const std::size_t len = std::max(p.size(), q.size());
    double sp = 0.0;
    double sq = 0.0;
    for (std::size_t l = 0; l < len; ++l) {
        sp += l < p.size() ? p[l] : 0.0;
        sq += l < q.size() ? q[l] : 0.0;
        if (sp < sq - kMajorizationTol) {
            return false;
        }
    }
    return true;
}

std::size_t eps_rank(const Spectrum& p, double eps) {
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw InputError("eps_rank needs 0 <= eps < 1");
    }
    double sum = 0.0;
    for (std::size_t m = 0; m < p.size(); ++m) {
        sum += p[m];
        if (sum >= 1.0 - eps - kEpsRankTol) {
            return m + 1;
        }
    }
    return p.size();
}

Spectrum tensor(const Spectrum& p, const Spectrum& q) {
    return Spectrum(kernels::outer_products(p.probs(), q.probs()));
}

double match_fidelity(const Spectrum& p, const Spectrum& q) {
    return std::clamp(kernels::sqrt_overlap(p.probs(), q.probs()), 0.0, 1.0);
}

Spectrum uniform(std::size_t k) {
    if (k == 0) {
        throw InputError("uniform spectrum needs k >= 1");
    }
    return Spectrum(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

Spectrum read_spectrum(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open spectrum file " + path.string());
    }
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view token(line.data() + first, last - first + 1);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw InputError(path.string() + ":" + std::to_string(lineno) +
                             ": not a decimal number");
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw InputError("spectrum file " + path.string() + " is empty");
    }
    return Spectrum::normalized(std::move(values));
}

void write_spectrum(const std::filesystem::path& path, const Spectrum& p) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write spectrum file " + path.string());
    }
    out.precision(17);
    for (double x : p.probs()) {
        out << x << '\n';
    }
}

} // namespace renyicc
