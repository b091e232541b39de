#include "renyicc/random.hpp"

#include <cmath>

#include "renyicc/error.hpp"
#include "renyicc/kernels.hpp"

namespace renyicc {

namespace {

void require_dim(std::size_t dim) {
    if (dim == 0) {
        throw InputError("random state dimension must be >= 1");
    }
}

std::vector<double> gaussian(std::size_t count, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> out(count);
    for (double& x : out) {
        x = normal(rng);
    }
    return out;
}

} // namespace

SymMatrix random_density_rank(std::size_t dim, std::size_t rank, Rng& rng) {
    require_dim(dim);
    if (rank == 0) {
        throw InputError("random state rank must be >= 1");
    }
    const auto g = gaussian(dim * rank, rng);
    Matrix w = kernels::gram(dim, rank, g, 1.0);
    const double tr = SymMatrix(w).trace();
    for (double& x : w.data()) {
        x /= tr;
    }
    return SymMatrix(std::move(w));
}

SymMatrix random_density(std::size_t dim, Rng& rng) { return random_density_rank(dim, dim, rng); }

SymMatrix random_density(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(dim, rng);
}

std::vector<double> random_unit_vector(std::size_t dim, Rng& rng) {
    require_dim(dim);
    auto v = gaussian(dim, rng);
    double norm = 0.0;
    for (double x : v) {
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : v) {
        x /= norm;
    }
    return v;
}

BipartitePure random_bipartite_pure(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
    require_dim(dim_a);
    require_dim(dim_b);
    const auto psi = random_unit_vector(dim_a * dim_b, rng);
    // coefficient matrix C[i][j] = <i_A j_B|psi>, so rho_A = C C^T
    const Matrix rho_a = kernels::gram(dim_a, dim_b, psi, 1.0);
    auto schmidt = Spectrum::from_eigenvalues(eigh(SymMatrix(rho_a)).eigenvalues);
    return {SymMatrix::projector(psi), std::move(schmidt)};
}

BipartitePure random_bipartite_pure(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
    Rng rng(seed);
    return random_bipartite_pure(dim_a, dim_b, rng);
}

Spectrum random_spectrum(std::size_t len, Rng& rng) {
    require_dim(len);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> v(len);
    double sum = 0.0;
    for (double& x : v) {
        x = expo(rng);
        sum += x;
    }
    for (double& x : v) {
        x /= sum;
    }
    return Spectrum(std::move(v));
}

} // namespace renyicc
