#pragma once

// Seeded generators for test instances. Deterministic for a fixed seed
// within one build (std::normal_distribution is implementation-defined
// across standard libraries).

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "renyicc/linalg.hpp"
#include "renyicc/spectra.hpp"

namespace renyicc {

using Rng = std::mt19937_64;

/// Full-rank Wishart state G G^T / Tr(G G^T) with G a dim x dim Gaussian.
SymMatrix random_density(std::size_t dim, std::uint64_t seed);
SymMatrix random_density(std::size_t dim, Rng& rng);

/// Wishart state of rank at most `rank` (G is dim x rank).
SymMatrix random_density_rank(std::size_t dim, std::size_t rank, Rng& rng);

/// Unit Gaussian vector.
std::vector<double> random_unit_vector(std::size_t dim, Rng& rng);

struct BipartitePure {
    SymMatrix projector; ///< |psi><psi| on the dim_a * dim_b space
    Spectrum schmidt;    ///< spectrum of Tr_B |psi><psi|
};

BipartitePure random_bipartite_pure(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);
BipartitePure random_bipartite_pure(std::size_t dim_a, std::size_t dim_b, Rng& rng);

/// Random probability vector of the given length (normalized exponentials).
Spectrum random_spectrum(std::size_t len, Rng& rng);

} // namespace renyicc
