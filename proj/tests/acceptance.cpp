// Acceptance gate. Prints one PASS/FAIL line per criterion.
//
//   acceptance          run criteria 1..10
//   acceptance 3 7      run only the listed criteria
//
// Exit status is 0 when every selected criterion passes.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"

#include "renyicc/bounds.hpp"
#include "renyicc/embezzle.hpp"
#include "renyicc/linalg.hpp"
#include "renyicc/random.hpp"
#include "renyicc/rectangles.hpp"
#include "renyicc/spectra.hpp"
#include "renyicc/verify.hpp"

using namespace renyicc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome ip_spectrum() {
    Outcome o;
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        const Spectrum s = function_spectrum(ip_rectangle(n));
        const double u = std::ldexp(1.0, -n);
        o.require(s.size() == (std::size_t{1} << n), fmt("n=%d wrong length", n));
        for (std::size_t i = 0; i < s.size(); ++i) {
            worst = std::max(worst, std::abs(s[i] - u));
        }
        for (Order b : {Order::finite(2), Order::finite(4), Order::infinity()}) {
            const double e = renyi(s, b);
            o.require(std::abs(e - n) <= 1e-8,
                      fmt("n=%d beta=%s entropy %.15g", n, b.to_string().c_str(), e));
        }
    }
    o.require(worst <= 1e-8, fmt("max entry deviation %.3e", worst));
    if (o.pass) {
        o.detail = fmt("max entry deviation %.2e", worst);
    }
    return o;
}

Outcome ip_bounds() {
    Outcome o;
    const double eps = 0.1;
    const auto closed = ip_bounds_closed(8, eps);
    const double lower = 4.0 + std::log2(1 - 2 * eps);
    const double upper = std::max(0.0, std::ceil(4.0 + 0.5 * std::log2(1 - 2 * eps)));
    o.require(std::abs(closed.value_bits - lower) <= 1e-9, fmt("lower %.15g", closed.value_bits));
    o.require(std::abs(closed.value_bits - 3.678071905112638) <= 1e-9, "lower differs from 3.678071905");
    o.require(std::abs(closed.companions.at("upper") - upper) <= 1e-9 && upper == 4.0,
              fmt("upper %.15g", closed.companions.at("upper")));
    const auto computed = function_bound_uniform(function_spectrum(ip_rectangle(8)), eps);
    const double gap = std::abs(computed.value_bits - closed.value_bits);
    o.require(gap <= 1e-6, fmt("spectral route %.15g vs closed %.15g", computed.value_bits, closed.value_bits));
    if (o.pass) {
        o.detail = fmt("lower %.12g upper %g spectral gap %.1e", closed.value_bits, upper, gap);
    }
    return o;
}

Outcome quadratic_character() {
    Outcome o;
    for (std::int64_t q : {7, 11, 101}) {
        const auto m = marginals(qchar_rectangle(q));
        const double qd = static_cast<double>(q);
        const auto& phi = m.phi_spectrum;
        const auto& psi = m.psi_spectrum;
        o.require(phi.size() == static_cast<std::size_t>(q), "phi length");
        o.require(std::abs(phi[0] - (1 - 1 / qd)) <= 1e-8, fmt("q=%lld phi[0] %.15g", (long long)q, phi[0]));
        for (std::size_t i = 1; i < phi.size(); ++i) {
            o.require(std::abs(phi[i] - 1 / (qd * (qd - 1))) <= 1e-8, fmt("q=%lld phi[%zu]", (long long)q, i));
        }
        for (std::size_t i = 0; i + 1 < psi.size(); ++i) {
            o.require(std::abs(psi[i] - 1 / (qd - 1)) <= 1e-8, fmt("q=%lld psi[%zu]", (long long)q, i));
        }
        o.require(std::abs(psi[psi.size() - 1]) <= 1e-8, fmt("q=%lld psi tail", (long long)q));
        const double half = renyi(phi, 0.5);
        o.require(std::abs(half - std::log2(4 - 4 / qd)) <= 1e-8, fmt("q=%lld S_1/2 %.15g", (long long)q, half));
    }
    const double closed = qchar_bound_closed(101, 0.0).value_bits;
    o.require(std::abs(closed - (std::log2(100.0) - 2)) <= 1e-9, fmt("closed bound %.15g", closed));

    // shift property: sum_x g(x+r) g(x+s) is q-1 for r = s and -1 otherwise
    auto shift_sum = [](std::int64_t q, std::int64_t r, std::int64_t s) {
        long long total = 0;
        for (std::int64_t x = 0; x < q; ++x) {
            total += legendre((x + r) % q, q) * legendre((x + s) % q, q);
        }
        return total;
    };
    std::size_t pairs = 0;
    for (std::int64_t r = 0; r < 7; ++r) {
        for (std::int64_t s = 0; s < 7; ++s) {
            const long long want = r == s ? 6 : -1;
            o.require(shift_sum(7, r, s) == want, fmt("shift q=7 r=%lld s=%lld", (long long)r, (long long)s));
            ++pairs;
        }
    }
    Rng rng(kDefaultSeed);
    std::uniform_int_distribution<std::int64_t> field(0, 100);
    for (int t = 0; t < 100; ++t) {
        const std::int64_t r = field(rng);
        const std::int64_t s = field(rng);
        const long long want = r == s ? 100 : -1;
        o.require(shift_sum(101, r, s) == want, fmt("shift q=101 r=%lld s=%lld", (long long)r, (long long)s));
        ++pairs;
    }
    if (o.pass) {
        o.detail = fmt("closed spectra matched for q=7,11,101; shift property on %zu pairs", pairs);
    }
    return o;
}

Outcome weak_subadditivity() {
    Outcome o;
    Rng rng(kDefaultSeed ^ 0x4a11);
    const std::array<std::size_t, 3> dims{2, 3, 4};
    std::uniform_int_distribution<int> pick(0, 2);
    std::size_t checks = 0;
    std::size_t violations = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t da = dims[pick(rng)];
        const std::size_t db = dims[pick(rng)];
        const SymMatrix rho = random_density(da * db, rng);
        const Spectrum s_ab = Spectrum::from_eigenvalues(eigh(rho).eigenvalues);
        const Spectrum s_a = Spectrum::from_eigenvalues(eigh(partial_trace_b(rho, da, db)).eigenvalues);
        const Spectrum s_b = Spectrum::from_eigenvalues(eigh(partial_trace_a(rho, da, db)).eigenvalues);
        const double log_rank_b = std::log2(static_cast<double>(s_b.rank()));
        for (Order a : exact_order_grid()) {
            const double joint = renyi(s_ab, a);
            const double marg = renyi(s_a, a);
            ++checks;
            if (joint < marg - log_rank_b - 1e-8 || joint > marg + log_rank_b + 1e-8) {
                ++violations;
            }
        }
    }
    o.require(violations == 0, fmt("%zu violations in %zu checks", violations, checks));
    if (o.pass) {
        o.detail = fmt("500 states, %zu checks, 0 violations", checks);
    }
    return o;
}

Outcome holder_floor_check() {
    Outcome o;
    Rng rng(kDefaultSeed ^ 0x401de7);
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    std::size_t checks = 0;
    std::size_t violations = 0;
    double tightest = 1e300;
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = dim(rng);
        const SymMatrix rho = random_density(d, rng);
        const SymMatrix sigma = random_density(d, rng);
        const double f = fidelity(rho, sigma);
        const Spectrum s_rho = Spectrum::from_eigenvalues(eigh(rho).eigenvalues);
        const Spectrum s_sigma = Spectrum::from_eigenvalues(eigh(sigma).eigenvalues);
        for (double a : {0.5, 0.6, 0.75, 0.9}) {
            const double lhs = renyi(s_rho, a);
            const double floor = holder_entropy_floor(s_sigma, a, 1.0 - f);
            ++checks;
            tightest = std::min(tightest, lhs - floor);
            if (lhs < floor - 1e-8) {
                ++violations;
            }
        }
    }
    o.require(violations == 0, fmt("%zu violations in %zu checks", violations, checks));
    if (o.pass) {
        o.detail = fmt("%zu checks, 0 violations, smallest margin %.3g bits", checks, tightest);
    }
    return o;
}

Outcome renyi_properties() {
    Outcome o;
    const auto checks = run_verification("spectra", kDefaultSeed);
    std::size_t total = 0;
    for (const auto& c : checks) {
        total += c.trials;
        o.require(c.passed(), c.name + ": " + c.first_failure);
    }
    if (o.pass) {
        o.detail = fmt("%zu properties, %zu checks, 0 violations", checks.size(), total);
    }
    return o;
}

Outcome embezzlement() {
    Outcome o;
    const Spectrum epr = uniform(2);
    double prev = 0.0;
    for (int k = 0; k <= 16; ++k) {
        const double f = embezzle_fidelity(std::size_t{1} << k, epr);
        o.require(f >= prev - 1e-12, fmt("fidelity decreases at d=2^%d", k));
        prev = f;
    }
    const double f2 = embezzle_fidelity(2, epr);
    const double oracle_f2 =
        oracle::best_matching({2.0 / 3, 1.0 / 3}, {1.0 / 3, 1.0 / 3, 1.0 / 6, 1.0 / 6});
    o.require(std::abs(f2 - (std::sqrt(2.0 / 9) + 1.0 / 3)) <= 1e-12 && std::abs(f2 - oracle_f2) <= 1e-12,
              fmt("d=2 fidelity %.15g", f2));
    double best = 0.0;
    std::size_t best_d = 0;
    for (int k = 0; k <= 20; ++k) {
        const double f = embezzle_fidelity(std::size_t{1} << k, epr);
        if (f > best) {
            best = f;
            best_d = std::size_t{1} << k;
        }
    }
    o.require(best > 0.99, fmt("largest fidelity for d <= 2^20 is %.12g at d=%zu, not above 0.99", best, best_d));
    if (o.pass) {
        o.detail = fmt("reaches %.6f at d=%zu", best, best_d);
    }
    return o;
}

Outcome eigensolver_oracle() {
    Outcome o;
    double worst = 0.0;
    std::size_t matrices = 0;
    const std::vector<double> values{-2.5, -1.0, -0.5, -1e-3, 0.0, 1e-3, 0.5, 1.0, 3.0};
    for (double a : values) {
        for (double b : values) {
            for (double d : values) {
                const auto e = eigh(SymMatrix(2, {a, b, b, d}));
                const auto r = oracle::eig2(a, b, d);
                worst = std::max({worst, std::abs(e.eigenvalues[0] - r[0]), std::abs(e.eigenvalues[1] - r[1])});
                ++matrices;
            }
        }
    }
    Rng rng(kDefaultSeed ^ 0x3b3);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::array<double, 9> m{};
        for (int i = 0; i < 3; ++i) {
            for (int j = i; j < 3; ++j) {
                m[3 * i + j] = m[3 * j + i] = n(rng);
            }
        }
        const auto e = eigh(SymMatrix(3, std::vector<double>(m.begin(), m.end())));
        const auto r = oracle::eig3(m);
        for (int k = 0; k < 3; ++k) {
            worst = std::max(worst, std::abs(e.eigenvalues[k] - r[k]));
        }
        ++matrices;
    }
    o.require(worst <= 1e-9, fmt("max eigenvalue deviation %.3e", worst));
    if (o.pass) {
        o.detail = fmt("%zu matrices, max deviation %.2e", matrices, worst);
    }
    return o;
}

Outcome eps_rank_oracle() {
    Outcome o;
    Rng rng(kDefaultSeed ^ 0xe95);
    std::uniform_int_distribution<std::size_t> len(1, 40);
    std::uniform_real_distribution<double> eps(0.0, 0.999);
    std::size_t mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        const Spectrum p = random_spectrum(len(rng), rng);
        const double e = eps(rng);
        const std::vector<double> v(p.probs().begin(), p.probs().end());
        if (eps_rank(p, e) != oracle::eps_rank_brute(v, e)) {
            ++mismatches;
        }
    }
    o.require(mismatches == 0, fmt("%zu of 1000 spectra disagree", mismatches));
    if (o.pass) {
        o.detail = "1000 spectra agree";
    }
    return o;
}

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    const std::string cmd = std::string(RENYICC_CLI) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Outcome determinism() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = run_cli("verify --suite all --seed 20020901");
    const auto b = run_cli("verify --suite all --seed 20020901");
    const double secs = seconds_since(t0) / 2;
    o.require(a.out == b.out && !a.out.empty(), "outputs differ between runs");
    o.require(secs < 60.0, fmt("suite took %.1f s", secs));
    o.require(a.code == 0 && b.code == 0, fmt("exit codes %d and %d (outputs byte-identical: %s)", a.code, b.code,
                                               a.out == b.out ? "yes" : "no"));
    if (o.pass) {
        o.detail = fmt("exit 0 twice, %zu identical bytes, %.1f s per run", a.out.size(), secs);
    }
    return o;
}

struct Criterion {
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

const std::array<Criterion, 10>& criteria() {
    static const std::array<Criterion, 10> all{{
        {"IP spectrum is uniform", 10.0, ip_spectrum},
        {"IP bound values", 1e9, ip_bounds},
        {"quadratic character spectra and shift property", 20.0, quadratic_character},
        {"weak subadditivity", 1e9, weak_subadditivity},
        {"Holder fidelity floor", 1e9, holder_floor_check},
        {"Renyi property suite", 1e9, renyi_properties},
        {"embezzlement fidelity", 10.0, embezzlement},
        {"eigensolver vs characteristic polynomial", 1e9, eigensolver_oracle},
        {"eps_rank vs brute force", 1e9, eps_rank_oracle},
        {"end-to-end determinism", 1e9, determinism},
    }};
    return all;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > 10) {
            std::fprintf(stderr, "usage: %s [criterion 1..10]...\n", argv[0]);
            return 2;
        }
        selected.push_back(k);
    }
    if (selected.empty()) {
        for (int k = 1; k <= 10; ++k) {
            selected.push_back(k);
        }
    }

    int failed = 0;
    for (int k : selected) {
        const auto& c = criteria()[k - 1];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = seconds_since(t0);
        if (o.pass && secs > c.budget_s) {
            o.pass = false;
            o.detail = fmt("took %.1f s, budget %.0f s", secs, c.budget_s);
        }
        std::printf("criterion %2d %s  %s: %s (%.2f s)\n", k, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
