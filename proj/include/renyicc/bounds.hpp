#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "renyicc/rectangles.hpp"
#include "renyicc/spectra.hpp"

namespace renyicc {

/// One evaluated grid point of a bound sweep. `order` is alpha for state
/// bounds and beta for function bounds.
struct SweepPoint {
    Order order;
    double value_bits;
};

/// A lower bound in bits together with the order that achieved it.
/// `value_bits` may be negative; value_bits_floored() is the display value.
struct BoundReport {
    std::string theorem_tag;
    double value_bits = 0.0;
    Order optimizer = Order::infinity();
    double eps = 0.0;
    std::map<std::string, double> params;
    std::map<std::string, double> companions;
    std::vector<SweepPoint> sweep;

    double value_bits_floored() const { return value_bits > 0.0 ? value_bits : 0.0; }
};

/// Conjugate orders alpha in [1/2, 1) and beta = alpha / (2 alpha - 1),
/// with beta = inf at alpha = 1/2.
struct ConjugatePair {
    double alpha;
    Order beta;
};

/// {0, 1e-3, 0.01, 0.1, 1/4, 1/2, 3/4, 0.9, 0.99, 1, 2, 4, 16, inf}
const std::vector<Order>& exact_order_grid();

/// Union of alpha = 1/2 + j/128 (j = 0..63) and the images of
/// beta = 1 + 2^{k/4} (k = -20..40), sorted by alpha. Shared by the state
/// and function sweeps so both routes see the same points.
const std::vector<ConjugatePair>& conjugate_grid();

/// max over the exact grid of S_a(psi) - S_a(phi): qubits needed to turn
/// phi into psi exactly.
BoundReport exact_transform_bound(const Spectrum& phi, const Spectrum& psi);

/// max over alpha of S_beta(psi) - S_alpha(phi) + 2a/(1-a) log2(1-eps):
/// qubits needed to reach fidelity 1-eps with psi from phi when any number
/// of maximally entangled pairs may be borrowed and returned.
BoundReport state_approx_bound(const Spectrum& phi, const Spectrum& psi, double eps);

/// Guaranteed floor on S_alpha(rho) for every rho with F(rho, sigma) > 1-eps.
double holder_entropy_floor(const Spectrum& sigma, double alpha, double eps);

/// max over beta of S_beta(sigma_f)/2 + beta/(beta-1) log2(1-2 eps), for
/// a function whose inputs are uniformly distributed.
BoundReport function_bound_uniform(const Spectrum& sigma_f, double eps);

/// Function bound for a (possibly promise) rectangle via its support and
/// signed states: value = state_approx_bound(phi_A, psi_A, 2 eps) / 2.
///
/// Companions:
///   as_stated              S_inf(psi_A) - 2 + 2 log2(1-eps), the headline
///                          form for the quadratic character (assumes
///                          S_1/2(phi_A) <= 2)
///   as_stated_applicable   1 if S_1/2(phi_A) <= 2, else 0
///   as_stated_state_bound  state_approx_bound(phi_A, psi_A, eps), un-halved
///   phi_renyi_half         S_1/2(phi_A)
///   psi_min_entropy        S_inf(psi_A)
BoundReport function_bound_promise(const Rectangle& r, double eps);

/// Inner product: lower n/2 + log2(1-2eps), companion `upper`
/// max(0, ceil(n/2 + log2(1-2eps)/2)) and `classical_lower` n + 2 log2(1-2eps).
BoundReport ip_bounds_closed(int n, double eps);

/// Quadratic character: lower log2(q-1) - 2 + 2 log2(1-eps), companion
/// `upper` ceil(log2 q).
BoundReport qchar_bound_closed(std::int64_t q, double eps);

} // namespace renyicc
