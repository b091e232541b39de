#include "renyicc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "renyicc/bounds.hpp"
#include "renyicc/embezzle.hpp"
#include "renyicc/error.hpp"
#include "renyicc/linalg.hpp"
#include "renyicc/random.hpp"
#include "renyicc/rectangles.hpp"
#include "renyicc/spectra.hpp"

namespace renyicc {

namespace {

class Check {
public:
    Check(std::string suite, std::string name) {
        result_.suite = std::move(suite);
        result_.name = std::move(name);
    }

    template <class Msg>
    void expect(bool ok, Msg&& message) {
        ++result_.trials;
        if (!ok) {
            ++result_.failures;
            if (result_.first_failure.empty()) {
                result_.first_failure = message();
            }
        }
    }

    PropertyCheck done() { return std::move(result_); }

private:
    PropertyCheck result_;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

// FNV-1a of the property name mixed into the master seed.
Rng property_rng(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return Rng(seed ^ h);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Matrix random_symmetric(std::size_t n, Rng& rng) {
    std::normal_distribution<double> normal;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double x = normal(rng);
            m(i, j) = x;
            m(j, i) = x;
        }
    }
    return m;
}

Spectrum spectrum_of(const SymMatrix& rho) {
    return Spectrum::from_eigenvalues(eigh(rho).eigenvalues);
}

double max_spectrum_gap(const Spectrum& p, const Spectrum& q) {
    const std::size_t len = std::max(p.size(), q.size());
    double gap = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double a = i < p.size() ? p[i] : 0.0;
        const double b = i < q.size() ? q[i] : 0.0;
        gap = std::max(gap, std::abs(a - b));
    }
    return gap;
}

// p majorizes the returned spectrum: one T-transform mixing two entries.
Spectrum t_transform(const Spectrum& p, Rng& rng) {
    std::vector<double> v(p.probs().begin(), p.probs().end());
    if (v.size() < 2) {
        return p;
    }
    const std::size_t i = pick(rng, 0, v.size() - 1);
    std::size_t j = pick(rng, 0, v.size() - 2);
    if (j >= i) {
        ++j;
    }
    const double t = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const double vi = v[i];
    const double vj = v[j];
    v[i] = t * vi + (1.0 - t) * vj;
    v[j] = (1.0 - t) * vi + t * vj;
    return Spectrum(std::move(v));
}

// The returned spectrum majorizes p: two entries merged into one.
Spectrum merge_entries(const Spectrum& p, Rng& rng) {
    std::vector<double> v(p.probs().begin(), p.probs().end());
    if (v.size() < 2) {
        return p;
    }
    const std::size_t i = pick(rng, 0, v.size() - 2);
    const std::size_t j = pick(rng, i + 1, v.size() - 1);
    v[i] += v[j];
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
    return Spectrum(std::move(v));
}

// ---------------------------------------------------------------- linalg

std::vector<PropertyCheck> linalg_suite(std::uint64_t seed) {
    std::vector<PropertyCheck> out;
    const std::string suite = "linalg";

    {
        Check c(suite, "eigh_reconstruction");
        Rng rng = property_rng(seed, "linalg.eigh_reconstruction");
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = pick(rng, 1, 16);
            const Matrix a = t % 2 ? random_symmetric(n, rng) : random_density(n, rng).matrix();
            const EigenDecomp ed = eigh(SymMatrix(a));
            Matrix scaled = ed.eigenvectors;
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t i = 0; i < n; ++i) {
                    scaled(k, i) *= ed.eigenvalues[i];
                }
            }
            const double rec = (scaled * ed.eigenvectors.transposed() - a).frobenius_norm();
            const double orth =
                (ed.eigenvectors.transposed() * ed.eigenvectors - Matrix::identity(n)).frobenius_norm();
            const bool sorted = std::is_sorted(ed.eigenvalues.begin(), ed.eigenvalues.end(), std::greater<>());
            c.expect(rec <= 1e-9 * a.frobenius_norm() && orth <= 1e-9 && sorted,
                     [&] { return fmt("reconstruction %.3g, orthogonality %.3g", rec, orth); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "psd_sqrt_square");
        Rng rng = property_rng(seed, "linalg.psd_sqrt_square");
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = pick(rng, 1, 12);
            const SymMatrix a = random_density_rank(n, pick(rng, 1, n), rng);
            const SymMatrix r = psd_sqrt(a);
            const double err = (r.matrix() * r.matrix() - a.matrix()).frobenius_norm();
            c.expect(err <= 1e-8 * a.matrix().frobenius_norm(),
                     [&] { return fmt("|R R - A| = %.3g", err); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "fidelity_symmetry_and_identity");
        Rng rng = property_rng(seed, "linalg.fidelity_symmetry_and_identity");
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = pick(rng, 1, 8);
            const SymMatrix rho = random_density_rank(n, pick(rng, 1, n), rng);
            const SymMatrix sigma = random_density_rank(n, pick(rng, 1, n), rng);
            const double f1 = fidelity(rho, sigma);
            const double f2 = fidelity(sigma, rho);
            const double self = fidelity(rho, rho);
            c.expect(std::abs(f1 - f2) <= 1e-8 && std::abs(self - 1.0) <= 1e-9 && f1 >= 0.0 && f1 <= 1.0,
                     [&] { return fmt("F(r,s)=%.12g F(s,r)=%.12g F(r,r)=%.12g", f1, f2, self); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "fidelity_pure_overlap");
        Rng rng = property_rng(seed, "linalg.fidelity_pure_overlap");
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = pick(rng, 2, 8);
            const auto phi = random_unit_vector(n, rng);
            const auto psi = random_unit_vector(n, rng);
            double overlap = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                overlap += phi[i] * psi[i];
            }
            const double f = fidelity(SymMatrix::projector(phi), SymMatrix::projector(psi));
            c.expect(std::abs(f - std::abs(overlap)) <= 1e-9,
                     [&] { return fmt("F=%.12g |<phi|psi>|=%.12g", f, std::abs(overlap)); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "fidelity_monotone_under_partial_trace");
        Rng rng = property_rng(seed, "linalg.fidelity_monotone_under_partial_trace");
        for (int t = 0; t < 100; ++t) {
            const std::size_t da = pick(rng, 2, 3);
            const std::size_t db = pick(rng, 2, 3);
            const std::size_t n = da * db;
            const SymMatrix rho = random_density_rank(n, pick(rng, 1, n), rng);
            const SymMatrix sigma = random_density_rank(n, pick(rng, 1, n), rng);
            const double joint = fidelity(rho, sigma);
            const double marginal = fidelity(partial_trace_b(rho, da, db), partial_trace_b(sigma, da, db));
            c.expect(marginal >= joint - 1e-8,
                     [&] { return fmt("F(marginals)=%.12g < F(joint)=%.12g", marginal, joint); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "fidelity_measurement_bound");
        Rng rng = property_rng(seed, "linalg.fidelity_measurement_bound");
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = pick(rng, 1, 8);
            const SymMatrix rho = random_density_rank(n, pick(rng, 1, n), rng);
            const SymMatrix sigma = random_density_rank(n, pick(rng, 1, n), rng);
            const EigenDecomp ed = eigh(rho);
            double classical = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double omega = 0.0;
                for (std::size_t a = 0; a < n; ++a) {
                    for (std::size_t b = 0; b < n; ++b) {
                        omega += ed.eigenvectors(a, i) * sigma(a, b) * ed.eigenvectors(b, i);
                    }
                }
                classical += std::sqrt(std::max(0.0, ed.eigenvalues[i]) * std::max(0.0, omega));
            }
            const double f = fidelity(rho, sigma);
            c.expect(f <= classical + 1e-8, [&] { return fmt("F=%.12g > %.12g", f, classical); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "pinch_preserves_marginal");
        Rng rng = property_rng(seed, "linalg.pinch_preserves_marginal");
        for (int t = 0; t < 100; ++t) {
            const std::size_t da = pick(rng, 1, 4);
            const std::size_t db = pick(rng, 1, 4);
            const SymMatrix rho = random_density_rank(da * db, pick(rng, 1, da * db), rng);
            const SymMatrix pinched = pinch(rho, da, db);
            const double gap = max_spectrum_gap(spectrum_of(partial_trace_b(pinched, da, db)),
                                                spectrum_of(partial_trace_b(rho, da, db)));
            const double trace_err = std::abs(pinched.trace() - 1.0);
            c.expect(gap <= 1e-9 && trace_err <= 1e-9,
                     [&] { return fmt("spectrum gap %.3g, trace error %.3g", gap, trace_err); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "pinch_increases_entropy");
        Rng rng = property_rng(seed, "linalg.pinch_increases_entropy");
        for (int t = 0; t < 100; ++t) {
            const std::size_t da = pick(rng, 2, 4);
            const std::size_t db = pick(rng, 2, 4);
            const SymMatrix rho = random_density_rank(da * db, pick(rng, 1, da * db), rng);
            const Spectrum before = spectrum_of(rho);
            const Spectrum after = spectrum_of(pinch(rho, da, db));
            for (Order a : exact_order_grid()) {
                const double s0 = renyi(before, a);
                const double s1 = renyi(after, a);
                c.expect(s1 >= s0 - 1e-9, [&] { return fmt("S(pinch)=%.12g < S(rho)=%.12g", s1, s0); });
            }
            c.expect(majorizes(before, after), [] { return std::string("rho does not majorize P(rho)"); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "schmidt_symmetry");
        Rng rng = property_rng(seed, "linalg.schmidt_symmetry");
        for (int t = 0; t < 60; ++t) {
            const std::size_t da = pick(rng, 1, 5);
            const std::size_t db = pick(rng, 1, 5);
            const BipartitePure state = random_bipartite_pure(da, db, rng);
            const Spectrum sa = spectrum_of(partial_trace_b(state.projector, da, db));
            const Spectrum sb = spectrum_of(partial_trace_a(state.projector, da, db));
            const double gap = std::max(max_spectrum_gap(sa, sb), max_spectrum_gap(sa, state.schmidt));
            c.expect(gap <= 1e-9, [&] { return fmt("marginal spectra differ by %.3g", gap); });
        }
        out.push_back(c.done());
    }
    return out;
}

// --------------------------------------------------------------- spectra

const std::vector<Order>& probe_orders() { return exact_order_grid(); }

std::vector<PropertyCheck> spectra_suite(std::uint64_t seed) {
    std::vector<PropertyCheck> out;
    const std::string suite = "spectra";

    {
        Check c(suite, "entropy_range");
        Rng rng = property_rng(seed, "spectra.entropy_range");
        for (int t = 0; t < 500; ++t) {
            const Spectrum p = random_spectrum(pick(rng, 1, 16), rng);
            const double cap = std::log2(static_cast<double>(p.rank()));
            for (Order a : probe_orders()) {
                const double s = renyi(p, a);
                c.expect(s >= 0.0 && s <= cap + 1e-9,
                         [&] { return fmt("S=%.12g outside [0, %.12g]", s, cap); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "uniform_is_maximal");
        Rng rng = property_rng(seed, "spectra.uniform_is_maximal");
        for (int t = 0; t < 200; ++t) {
            const std::size_t r = pick(rng, 2, 16);
            const Spectrum p = random_spectrum(r, rng);
            const double cap = std::log2(static_cast<double>(r));
            for (Order a : probe_orders()) {
                if (!a.is_infinite() && a.value() == 0.0) {
                    continue;
                }
                const double su = renyi(uniform(r), a);
                const double sp = renyi(p, a);
                c.expect(std::abs(su - cap) <= 1e-9 && sp < cap,
                         [&] { return fmt("S(uniform)=%.12g S(p)=%.12g log r=%.12g", su, sp, cap); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "pure_state_minimality");
        Rng rng = property_rng(seed, "spectra.pure_state_minimality");
        for (int t = 0; t < 200; ++t) {
            const std::size_t len = pick(rng, 1, 12);
            std::vector<double> pure(len, 0.0);
            pure[0] = 1.0;
            const Spectrum p(pure);
            const Spectrum mixed = random_spectrum(pick(rng, 2, 12), rng);
            for (Order a : probe_orders()) {
                const double sp = renyi(p, a);
                c.expect(sp == 0.0, [&] { return fmt("S(pure)=%.3g", sp); });
                if (a.is_infinite() || a.value() > 0.0) {
                    const double sm = renyi(mixed, a);
                    c.expect(sm > 0.0, [&] { return fmt("S(mixed)=%.3g", sm); });
                }
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "additivity");
        Rng rng = property_rng(seed, "spectra.additivity");
        for (int t = 0; t < 500; ++t) {
            const Spectrum p = random_spectrum(pick(rng, 1, 10), rng);
            const Spectrum q = random_spectrum(pick(rng, 1, 10), rng);
            const Spectrum pq = tensor(p, q);
            for (Order a : probe_orders()) {
                const double err = std::abs(renyi(pq, a) - renyi(p, a) - renyi(q, a));
                c.expect(err <= 1e-8, [&] { return fmt("additivity error %.3g", err); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "order_monotonicity");
        Rng rng = property_rng(seed, "spectra.order_monotonicity");
        const auto& grid = probe_orders();
        for (int t = 0; t < 500; ++t) {
            const Spectrum p = random_spectrum(pick(rng, 1, 16), rng);
            for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
                const double lo = renyi(p, grid[i]);
                const double hi = renyi(p, grid[i + 1]);
                c.expect(lo >= hi - 1e-9, [&] { return fmt("S_a=%.12g < S_b=%.12g", lo, hi); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "schur_concavity");
        Rng rng = property_rng(seed, "spectra.schur_concavity");
        for (int t = 0; t < 500; ++t) {
            const Spectrum p = random_spectrum(pick(rng, 2, 12), rng);
            Spectrum q = p;
            const std::size_t steps = pick(rng, 1, 4);
            for (std::size_t s = 0; s < steps; ++s) {
                q = t_transform(q, rng);
            }
            c.expect(majorizes(p, q), [] { return std::string("T-transform broke majorization"); });
            for (Order a : probe_orders()) {
                const double sp = renyi(p, a);
                const double sq = renyi(q, a);
                c.expect(sp <= sq + 1e-9, [&] { return fmt("S(p)=%.12g > S(q)=%.12g", sp, sq); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "continuity_at_exceptional_orders");
        Rng rng = property_rng(seed, "spectra.continuity_at_exceptional_orders");
        for (int t = 0; t < 100; ++t) {
            const Spectrum p = random_spectrum(pick(rng, 1, 16), rng);
            const double s1 = renyi(p, 1.0);
            const double s0 = renyi(p, 0.0);
            const double sinf = renyi(p, Order::infinity());
            const double e1 = std::max(std::abs(renyi(p, 1.0 - 1e-4) - s1), std::abs(renyi(p, 1.0 + 1e-4) - s1));
            const double e0 = std::abs(renyi(p, 1e-4) - s0);
            const double einf = std::abs(renyi(p, 1e4) - sinf);
            c.expect(e1 <= 1e-2 && e0 <= 1e-2 && einf <= 1e-2,
                     [&] { return fmt("continuity gaps %.3g %.3g %.3g", e1, e0, einf); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "eps_rank_definition");
        Rng rng = property_rng(seed, "spectra.eps_rank_definition");
        for (int t = 0; t < 500; ++t) {
            const Spectrum p = random_spectrum(pick(rng, 1, 20), rng);
            const double eps = std::uniform_real_distribution<double>(0.0, 0.999)(rng);
            const std::size_t m = eps_rank(p, eps);
            double head = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                head += p[j];
            }
            const double shorter = head - p[m - 1];
            c.expect(head >= 1.0 - eps - 1e-12 && (m == 1 || shorter < 1.0 - eps - 1e-12),
                     [&] { return fmt("eps_rank=%g fails for eps=%.6g", static_cast<double>(m), eps); });
        }
        out.push_back(c.done());
    }
    return out;
}

// ---------------------------------------------------------------- bounds

std::vector<PropertyCheck> bounds_suite(std::uint64_t seed) {
    std::vector<PropertyCheck> out;
    const std::string suite = "bounds";

    {
        Check c(suite, "weak_subadditivity");
        Rng rng = property_rng(seed, "bounds.weak_subadditivity");
        for (int t = 0; t < 500; ++t) {
            const std::size_t da = pick(rng, 2, 4);
            const std::size_t db = pick(rng, 2, 4);
            const SymMatrix rho = random_density(da * db, rng);
            const Spectrum s_ab = spectrum_of(rho);
            const Spectrum s_a = spectrum_of(partial_trace_b(rho, da, db));
            const double log_rank_b = std::log2(static_cast<double>(spectrum_of(partial_trace_a(rho, da, db)).rank()));
            for (Order a : exact_order_grid()) {
                const double joint = renyi(s_ab, a);
                const double marginal = renyi(s_a, a);
                c.expect(marginal - log_rank_b <= joint + 1e-8 && joint <= marginal + log_rank_b + 1e-8,
                         [&] { return fmt("S(AB)=%.12g S(A)=%.12g log rank B=%.12g", joint, marginal, log_rank_b); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "communication_step");
        Rng rng = property_rng(seed, "bounds.communication_step");
        for (int t = 0; t < 100; ++t) {
            const std::size_t da = pick(rng, 2, 3);
            const std::size_t qubits = pick(rng, 1, 2);
            const std::size_t dc = std::size_t{1} << qubits;
            const std::size_t db = pick(rng, 2, 3);
            // A-C-B ordering: trace B from the pure state, then C
            const auto psi = random_unit_vector(da * dc * db, rng);
            const SymMatrix rho_ac = partial_trace_b(SymMatrix::projector(psi), da * dc, db);
            const SymMatrix rho_a = partial_trace_b(rho_ac, da, dc);
            const Spectrum s_ac = spectrum_of(rho_ac);
            const Spectrum s_a = spectrum_of(rho_a);
            for (Order a : exact_order_grid()) {
                const double change = std::abs(renyi(s_ac, a) - renyi(s_a, a));
                c.expect(change <= static_cast<double>(qubits) + 1e-8,
                         [&] { return fmt("moving %g qubits changed S by %.12g", static_cast<double>(qubits), change); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "holder_floor");
        Rng rng = property_rng(seed, "bounds.holder_floor");
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = pick(rng, 2, 6);
            const SymMatrix rho = random_density_rank(n, pick(rng, 1, n), rng);
            const SymMatrix sigma = random_density_rank(n, pick(rng, 1, n), rng);
            const double f = fidelity(rho, sigma);
            const Spectrum s_rho = spectrum_of(rho);
            const Spectrum s_sigma = spectrum_of(sigma);
            for (double alpha : {0.5, 0.6, 0.75, 0.9}) {
                const double floor = holder_entropy_floor(s_sigma, alpha, 1.0 - f);
                const double s = renyi(s_rho, alpha);
                c.expect(s >= floor - 1e-8, [&] { return fmt("S_a(rho)=%.12g < floor %.12g (F=%.6g)", s, floor, f); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "majorization_step");
        Rng rng = property_rng(seed, "bounds.majorization_step");
        std::size_t majorizing = 0;
        for (int t = 0; t < 300; ++t) {
            const Spectrum phi = random_spectrum(pick(rng, 1, 6), rng);
            const std::size_t k = pick(rng, 1, 4);
            const Spectrum lifted = tensor(phi, uniform(k));
            Spectrum psi = t % 2 ? random_spectrum(pick(rng, 1, 12), rng) : lifted;
            if (t % 2 == 0) {
                const std::size_t merges = pick(rng, 0, lifted.size() - 1);
                for (std::size_t m = 0; m < merges; ++m) {
                    psi = merge_entries(psi, rng);
                }
            }
            const double bound = exact_transform_bound(phi, psi).value_bits;
            const double budget = std::log2(static_cast<double>(k));
            const bool reachable = majorizes(psi, lifted);
            majorizing += reachable;
            // reachable by k-dimensional teleportation => bound within budget
            c.expect(!reachable || bound <= budget + 1e-9,
                     [&] { return fmt("bound %.12g exceeds log2 k = %.12g", bound, budget); });
        }
        c.expect(majorizing > 0, [] { return std::string("no majorizing instance generated"); });
        out.push_back(c.done());
    }
    {
        Check c(suite, "eps_monotonicity");
        Rng rng = property_rng(seed, "bounds.eps_monotonicity");
        for (int t = 0; t < 40; ++t) {
            const Spectrum phi = random_spectrum(pick(rng, 1, 8), rng);
            const Spectrum psi = random_spectrum(pick(rng, 1, 8), rng);
            const auto rect = qchar_rectangle(t % 2 ? 7 : 11);
            double prev[6] = {INFINITY, INFINITY, INFINITY, INFINITY, INFINITY, INFINITY};
            for (double eps : {0.0, 0.05, 0.1, 0.2, 0.3, 0.45}) {
                const double now[6] = {
                    state_approx_bound(phi, psi, eps).value_bits,
                    holder_entropy_floor(psi, 0.75, eps),
                    function_bound_uniform(psi, eps).value_bits,
                    function_bound_promise(rect, eps).value_bits,
                    ip_bounds_closed(6, eps).value_bits,
                    qchar_bound_closed(101, eps).value_bits,
                };
                for (int i = 0; i < 6; ++i) {
                    c.expect(now[i] <= prev[i] + 1e-12,
                             [&] { return fmt("evaluator %g increased with eps=%.3g", i, eps); });
                    prev[i] = now[i];
                }
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "shift_property");
        Rng rng = property_rng(seed, "bounds.shift_property");
        auto shift_sum = [](std::int64_t q, std::int64_t r, std::int64_t s) {
            std::int64_t sum = 0;
            for (std::int64_t x = 0; x < q; ++x) {
                sum += legendre((x + r) % q, q) * legendre((x + s) % q, q);
            }
            return sum;
        };
        for (std::int64_t r = 0; r < 7; ++r) {
            for (std::int64_t s = 0; s < 7; ++s) {
                const std::int64_t got = shift_sum(7, r, s);
                c.expect(got == (r == s ? 6 : -1), [&] { return fmt("q=7 r=%g s=%g sum=%g", r, s, got); });
            }
        }
        for (int t = 0; t < 100; ++t) {
            const auto r = static_cast<std::int64_t>(pick(rng, 0, 100));
            const auto s = static_cast<std::int64_t>(pick(rng, 0, 100));
            const std::int64_t got = shift_sum(101, r, s);
            c.expect(got == (r == s ? 100 : -1), [&] { return fmt("q=101 r=%g s=%g sum=%g", r, s, got); });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "rectangle_marginals");
        Rng rng = property_rng(seed, "bounds.rectangle_marginals");
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = pick(rng, 1, 12);
            const std::size_t cols = pick(rng, 1, 12);
            const bool promise = t % 2 == 1;
            std::vector<std::int8_t> entries(rows * cols);
            for (auto& e : entries) {
                e = static_cast<std::int8_t>(promise ? static_cast<int>(pick(rng, 0, 2)) - 1
                                                     : (pick(rng, 0, 1) ? 1 : -1));
            }
            entries[0] = 1;
            const Rectangle rect(rows, cols, entries);
            const MarginalPair m = marginals(rect);
            const double trace_err =
                std::max(std::abs(m.phi_a.trace() - 1.0), std::abs(m.psi_a.trace() - 1.0));
            c.expect(trace_err <= 1e-9, [&] { return fmt("marginal trace error %.3g", trace_err); });
            if (!promise) {
                const double gap = max_spectrum_gap(function_spectrum(rect), function_spectrum_columns(rect));
                c.expect(gap <= 1e-8, [&] { return fmt("row/column spectra differ by %.3g", gap); });
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "qchar_closed_forms");
        for (std::int64_t q : {7, 11, 101}) {
            const MarginalPair m = marginals(qchar_rectangle(q));
            const double norm = 1.0 / static_cast<double>(q * (q - 1));
            double worst = 0.0;
            for (std::int64_t i = 0; i < q; ++i) {
                for (std::int64_t j = 0; j < q; ++j) {
                    const double phi = norm * ((i == j ? 1.0 : 0.0) + static_cast<double>(q - 2));
                    const double psi = norm * ((i == j ? static_cast<double>(q) : 0.0) - 1.0);
                    const auto ui = static_cast<std::size_t>(i);
                    const auto uj = static_cast<std::size_t>(j);
                    worst = std::max({worst, std::abs(m.phi_a(ui, uj) - phi), std::abs(m.psi_a(ui, uj) - psi)});
                }
            }
            c.expect(worst <= 1e-12, [&] { return fmt("q=%g closed-form error %.3g", static_cast<double>(q), worst); });
        }
        out.push_back(c.done());
    }
    return out;
}

// -------------------------------------------------------------- embezzle

std::vector<PropertyCheck> embezzle_suite(std::uint64_t) {
    std::vector<PropertyCheck> out;
    const std::string suite = "embezzle";
    const std::vector<Spectrum> targets = {uniform(2), uniform(4), Spectrum({0.9, 0.1})};

    {
        Check c(suite, "fidelity_monotone_in_d");
        for (const auto& target : targets) {
            double prev = 0.0;
            for (std::size_t d = 1; d <= (std::size_t{1} << 16); d *= 2) {
                const double f = embezzle_fidelity(d, target);
                c.expect(f >= prev - 1e-12 && f <= 1.0,
                         [&] { return fmt("d=%g fidelity %.12g after %.12g", static_cast<double>(d), f, prev); });
                prev = f;
            }
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "fidelity_reaches_0.999");
        for (const auto& target : targets) {
            double best = 0.0;
            std::size_t best_d = 0;
            for (std::size_t d = 1; d <= kMaxEmbezzleDim && d <= kMaxProductSize / target.size(); d *= 2) {
                const double f = embezzle_fidelity(d, target);
                if (f > best) {
                    best = f;
                    best_d = d;
                }
                if (f > 0.999) {
                    break;
                }
            }
            c.expect(best > 0.999, [&] {
                return fmt("target of length %g peaks at fidelity %.12g (d=%g) below 0.999",
                           static_cast<double>(target.size()), best, static_cast<double>(best_d));
            });
        }
        out.push_back(c.done());
    }
    {
        Check c(suite, "catalyst_entropy_range");
        for (std::size_t d = 1; d <= (std::size_t{1} << 16); d *= 2) {
            const Spectrum m = m_spectrum(d);
            const double cap = std::log2(static_cast<double>(d));
            for (Order a : exact_order_grid()) {
                const double s = renyi(m, a);
                c.expect(std::isfinite(s) && s >= 0.0 && s <= cap + 1e-9,
                         [&] { return fmt("S(M(%g))=%.12g above log d=%.12g", static_cast<double>(d), s, cap); });
            }
        }
        out.push_back(c.done());
    }
    return out;
}

} // namespace

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> names = {"linalg", "spectra", "bounds", "embezzle"};
    return names;
}

std::vector<PropertyCheck> run_verification(const std::string& suite, std::uint64_t seed) {
    using Runner = std::vector<PropertyCheck> (*)(std::uint64_t);
    const std::vector<std::pair<std::string, Runner>> runners = {
        {"linalg", linalg_suite},
        {"spectra", spectra_suite},
        {"bounds", bounds_suite},
        {"embezzle", embezzle_suite},
    };
    std::vector<PropertyCheck> out;
    bool known = suite == "all";
    for (const auto& [name, run] : runners) {
        if (suite == "all" || suite == name) {
            known = true;
            auto part = run(seed);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    if (!known) {
        throw InputError("unknown suite '" + suite + "' (expected all, linalg, spectra, bounds or embezzle)");
    }
    return out;
}

std::string format_verification(const std::vector<PropertyCheck>& checks, const std::string& suite,
                                std::uint64_t seed) {
    std::ostringstream out;
    out << "verify suite=" << suite << " seed=" << seed << '\n';
    std::size_t failed = 0;
    for (const auto& c : checks) {
        out << (c.passed() ? "[PASS] " : "[FAIL] ") << c.suite << '.' << c.name << "  checks=" << c.trials
            << " failures=" << c.failures;
        if (!c.passed()) {
            out << "  first: " << c.first_failure;
            ++failed;
        }
        out << '\n';
    }
    out << "summary: " << (checks.size() - failed) << '/' << checks.size() << " properties passed\n";
    return out.str();
}

} // namespace renyicc
