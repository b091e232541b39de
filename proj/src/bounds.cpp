#include "renyicc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "renyicc/error.hpp"
#include "renyicc/kernels.hpp"

namespace renyicc {

namespace {

void require_state_eps(double eps) {
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw InputError("state bounds need 0 <= eps < 1");
    }
}

void require_function_eps(double eps) {
    if (!(eps >= 0.0 && eps < 0.5)) {
        throw InputError("function bounds need 0 <= eps < 1/2");
    }
}

// First strict maximum, so ties resolve to the earliest grid point.
void take_best(BoundReport& report) {
    auto best = report.sweep.begin();
    for (auto it = report.sweep.begin(); it != report.sweep.end(); ++it) {
        if (it->value_bits > best->value_bits) {
            best = it;
        }
    }
    report.value_bits = best->value_bits;
    report.optimizer = best->order;
}

double alpha_weight(double alpha) { return 2.0 * alpha / (1.0 - alpha); }

double beta_weight(Order beta) {
    if (beta.is_infinite()) {
        return 1.0;
    }
    return beta.value() / (beta.value() - 1.0);
}

} // namespace

const std::vector<Order>& exact_order_grid() {
    static const std::vector<Order> grid = [] {
        std::vector<Order> g;
        for (double a : {0.0, 1e-3, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 1.0, 2.0, 4.0, 16.0}) {
            g.push_back(Order::finite(a));
        }
        g.push_back(Order::infinity());
        return g;
    }();
    return grid;
}

const std::vector<ConjugatePair>& conjugate_grid() {
    static const std::vector<ConjugatePair> grid = [] {
        std::vector<ConjugatePair> g;
        g.push_back({0.5, Order::infinity()});
        for (int j = 1; j < 64; ++j) {
            const double alpha = 0.5 + j / 128.0;
            g.push_back({alpha, Order::finite(alpha / (2.0 * alpha - 1.0))});
        }
        for (int k = -20; k <= 40; ++k) {
            const double beta = 1.0 + std::exp2(k / 4.0);
            g.push_back({beta / (2.0 * beta - 1.0), Order::finite(beta)});
        }
        std::stable_sort(g.begin(), g.end(),
                         [](const ConjugatePair& x, const ConjugatePair& y) { return x.alpha < y.alpha; });
        // both families contain a few identical alphas (0.75 <-> beta 1.5, ...)
        const auto last = std::unique(g.begin(), g.end(), [](const ConjugatePair& x, const ConjugatePair& y) {
            return std::abs(x.alpha - y.alpha) <= 1e-14;
        });
        g.erase(last, g.end());
        return g;
    }();
    return grid;
}

BoundReport exact_transform_bound(const Spectrum& phi, const Spectrum& psi) {
    const auto& grid = exact_order_grid();
    BoundReport report;
    report.theorem_tag = "state_exact";
    report.sweep.resize(grid.size(), {Order::infinity(), 0.0});
    kernels::parallel_for(grid.size(), [&](std::size_t i) {
        report.sweep[i] = {grid[i], renyi(psi, grid[i]) - renyi(phi, grid[i])};
    });
    take_best(report);
    return report;
}

BoundReport state_approx_bound(const Spectrum& phi, const Spectrum& psi, double eps) {
    require_state_eps(eps);
    const auto& grid = conjugate_grid();
    const double log_fid = std::log2(1.0 - eps);
    BoundReport report;
    report.theorem_tag = "state_approx";
    report.eps = eps;
    report.sweep.resize(grid.size(), {Order::infinity(), 0.0});
    kernels::parallel_for(grid.size(), [&](std::size_t i) {
        const auto& pair = grid[i];
        const double value =
            renyi(psi, pair.beta) - renyi(phi, pair.alpha) + alpha_weight(pair.alpha) * log_fid;
        report.sweep[i] = {Order::finite(pair.alpha), value};
    });
    take_best(report);
    return report;
}

double holder_entropy_floor(const Spectrum& sigma, double alpha, double eps) {
    if (!(alpha >= 0.5 && alpha < 1.0)) {
        throw InputError("holder_entropy_floor needs 1/2 <= alpha < 1");
    }
    require_state_eps(eps);
    const Order beta = alpha == 0.5 ? Order::infinity() : Order::finite(alpha / (2.0 * alpha - 1.0));
    return renyi(sigma, beta) + alpha_weight(alpha) * std::log2(1.0 - eps);
}

BoundReport function_bound_uniform(const Spectrum& sigma_f, double eps) {
    require_function_eps(eps);
    const auto& grid = conjugate_grid();
    const double log_success = std::log2(1.0 - 2.0 * eps);
    BoundReport report;
    report.theorem_tag = "function_uniform";
    report.eps = eps;
    report.sweep.resize(grid.size(), {Order::infinity(), 0.0});
    kernels::parallel_for(grid.size(), [&](std::size_t i) {
        const Order beta = grid[i].beta;
        report.sweep[i] = {beta, 0.5 * renyi(sigma_f, beta) + beta_weight(beta) * log_success};
    });
    take_best(report);
    return report;
}

BoundReport function_bound_promise(const Rectangle& r, double eps) {
    require_function_eps(eps);
    const MarginalPair m = marginals(r);
    const BoundReport doubled = state_approx_bound(m.phi_spectrum, m.psi_spectrum, 2.0 * eps);
    const BoundReport plain = state_approx_bound(m.phi_spectrum, m.psi_spectrum, eps);

    BoundReport report;
    report.theorem_tag = "function_promise";
    report.eps = eps;
    report.value_bits = 0.5 * doubled.value_bits;
    report.optimizer = doubled.optimizer;
    report.sweep = doubled.sweep;
    for (auto& point : report.sweep) {
        point.value_bits *= 0.5;
    }
    report.params["rows"] = static_cast<double>(r.rows());
    report.params["cols"] = static_cast<double>(r.cols());
    report.params["support_size"] = static_cast<double>(r.support_size());

    const double phi_half = renyi(m.phi_spectrum, 0.5);
    const double psi_min = renyi(m.psi_spectrum, Order::infinity());
    report.companions["as_stated"] = psi_min - 2.0 + 2.0 * std::log2(1.0 - eps);
    report.companions["as_stated_applicable"] = phi_half <= 2.0 ? 1.0 : 0.0;
    report.companions["as_stated_state_bound"] = plain.value_bits;
    report.companions["phi_renyi_half"] = phi_half;
    report.companions["psi_min_entropy"] = psi_min;
    return report;
}

BoundReport ip_bounds_closed(int n, double eps) {
    if (n < 1) {
        throw InputError("inner product bounds need n >= 1");
    }
    require_function_eps(eps);
    const double log_success = std::log2(1.0 - 2.0 * eps);
    const double half_n = 0.5 * n;
    BoundReport report;
    report.theorem_tag = "ip_closed";
    report.eps = eps;
    report.value_bits = half_n + log_success;
    report.optimizer = Order::infinity();
    report.params["n"] = n;
    report.companions["upper"] = std::max(0.0, std::ceil(half_n + 0.5 * log_success));
    report.companions["classical_lower"] = n + 2.0 * log_success;
    return report;
}

BoundReport qchar_bound_closed(std::int64_t q, double eps) {
    if (q < 3 || q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(q))) {
        throw InputError("q = " + std::to_string(q) + " is not an odd prime");
    }
    require_state_eps(eps);
    int bits = 0;
    while ((std::int64_t{1} << bits) < q) {
        ++bits;
    }
    BoundReport report;
    report.theorem_tag = "qchar_closed";
    report.eps = eps;
    report.value_bits = std::log2(static_cast<double>(q - 1)) - 2.0 + 2.0 * std::log2(1.0 - eps);
    report.optimizer = Order::finite(0.5);
    report.params["q"] = static_cast<double>(q);
    report.companions["upper"] = bits;
    return report;
}

} // namespace renyicc
