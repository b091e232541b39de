// renyicc: command-line front end for the Renyi-entropy communication bounds.
//
// Exit codes: 0 success, 1 invariant violation / search failure,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "renyicc/bounds.hpp"
#include "renyicc/embezzle.hpp"
#include "renyicc/error.hpp"
#include "renyicc/rectangles.hpp"
#include "renyicc/report.hpp"
#include "renyicc/spectra.hpp"
#include "renyicc/verify.hpp"

namespace {

using nlohmann::json;
using namespace renyicc;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "json";
    std::string path;

    void add_to(CLI::App* cmd, bool with_format = true) {
        if (with_format) {
            cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        }
        cmd->add_option("--output", path, "write here instead of standard output");
    }

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) {
            throw InputError("cannot write " + path);
        }
        out << text;
    }

    void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

void require_json(const Output& out, const char* cmd) {
    if (out.format != "json") {
        throw InputError(std::string(cmd) + " only produces JSON");
    }
}

// ------------------------------------------------------------------ entropy

struct EntropyArgs {
    std::string spectrum;
    std::string alpha;
    Output out;
};

int run_entropy(const EntropyArgs& args) {
    require_json(args.out, "entropy");
    const Order order = Order::parse(args.alpha);
    const Spectrum p = read_spectrum(args.spectrum);
    args.out.emit(json{
        {"alpha", order_json(order)},
        {"entropy_bits", round12(renyi(p, order))},
        {"rank", p.rank()},
    });
    return kExitOk;
}

// ------------------------------------------------------------ function-bound

struct FunctionArgs {
    std::string family;
    std::string rectangle;
    std::optional<int> n;
    std::optional<std::int64_t> q;
    double eps = 0.0;
    Output out;
};

void add_companions(BoundReport& report, const BoundReport& closed, const std::string& prefix) {
    report.companions[prefix + "_lower"] = closed.value_bits;
    for (const auto& [key, value] : closed.companions) {
        report.companions[prefix + "_" + key] = value;
    }
}

int run_function_bound(const FunctionArgs& args) {
    if (args.family.empty() == args.rectangle.empty()) {
        throw InputError("give exactly one of --family or --rectangle");
    }
    BoundReport report;
    std::string family;
    std::string param;
    if (args.family == "ip") {
        if (!args.n) {
            throw InputError("--family ip needs --n");
        }
        if (args.q) {
            throw InputError("--q does not apply to --family ip");
        }
        const Rectangle rect = ip_rectangle(*args.n);
        report = function_bound_uniform(function_spectrum(rect), args.eps);
        report.params["n"] = *args.n;
        add_companions(report, ip_bounds_closed(*args.n, args.eps), "ip");
        family = "ip";
        param = std::to_string(*args.n);
    } else if (args.family == "qchar") {
        if (!args.q) {
            throw InputError("--family qchar needs --q");
        }
        if (args.n) {
            throw InputError("--n does not apply to --family qchar");
        }
        report = function_bound_promise(qchar_rectangle(*args.q), args.eps);
        report.params["q"] = static_cast<double>(*args.q);
        add_companions(report, qchar_bound_closed(*args.q, args.eps), "qchar");
        family = "qchar";
        param = std::to_string(*args.q);
    } else {
        if (args.n || args.q) {
            throw InputError("--n/--q do not apply to --rectangle");
        }
        const Rectangle rect = rectangle_from_csv(args.rectangle);
        if (rect.full_support()) {
            report = function_bound_uniform(function_spectrum(rect), args.eps);
        } else {
            report = function_bound_promise(rect, args.eps);
        }
        report.params["rows"] = static_cast<double>(rect.rows());
        report.params["cols"] = static_cast<double>(rect.cols());
        family = "rectangle";
        param = args.rectangle;
    }

    if (args.out.format == "csv") {
        args.out.emit(sweep_csv(report, family, param));
        return kExitOk;
    }
    json j = to_json(report);
    j["params"]["family"] = family;
    if (family == "rectangle") {
        j["params"]["path"] = args.rectangle;
    }
    args.out.emit(j);
    return kExitOk;
}

// --------------------------------------------------------------- state-bound

struct StateArgs {
    std::string phi;
    std::string psi;
    double eps = 0.0;
    bool exact = false;
    Output out;
};

int run_state_bound(const StateArgs& args) {
    const Spectrum phi = read_spectrum(args.phi);
    const Spectrum psi = read_spectrum(args.psi);
    BoundReport report = args.exact ? exact_transform_bound(phi, psi)
                                    : state_approx_bound(phi, psi, args.eps);
    report.params["phi_length"] = static_cast<double>(phi.size());
    report.params["psi_length"] = static_cast<double>(psi.size());
    if (args.out.format == "csv") {
        args.out.emit(sweep_csv(report, report.theorem_tag, ""));
        return kExitOk;
    }
    args.out.emit(to_json(report));
    return kExitOk;
}

// ------------------------------------------------------------------ embezzle

struct EmbezzleArgs {
    std::string target_file;
    std::optional<std::size_t> target_epr;
    std::optional<double> eps;
    std::optional<std::size_t> dim;
    Output out;
};

int run_embezzle(const EmbezzleArgs& args) {
    require_json(args.out, "embezzle");
    if (args.target_file.empty() == !args.target_epr.has_value()) {
        throw InputError("give exactly one of --target or --target-epr");
    }
    if (args.eps.has_value() == args.dim.has_value()) {
        throw InputError("give exactly one of --eps or --dim");
    }
    const Spectrum target = args.target_epr ? uniform(*args.target_epr) : read_spectrum(args.target_file);
    const std::string descriptor = args.target_epr ? "epr:" + std::to_string(*args.target_epr)
                                                   : "file:" + args.target_file;
    if (args.dim) {
        EmbezzleResult result;
        result.d = *args.dim;
        result.fidelity = embezzle_fidelity(*args.dim, target);
        result.target = descriptor;
        result.target_length = target.size();
        args.out.emit(to_json(result));
        return kExitOk;
    }
    try {
        args.out.emit(to_json(min_embezzle_dim(target, *args.eps, descriptor)));
        return kExitOk;
    } catch (const EmbezzleCapExceeded& e) {
        json j = to_json(e.best());
        j["error"] = e.what();
        args.out.emit(j);
        std::cerr << "renyicc: " << e.what() << "\n";
        return kExitViolation;
    }
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = kDefaultSeed;
    Output out;
};

int run_verify(const VerifyArgs& args) {
    const auto checks = run_verification(args.suite, args.seed);
    args.out.emit(format_verification(checks, args.suite, args.seed));
    for (const auto& c : checks) {
        if (!c.passed()) {
            return kExitViolation;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Renyi-entropy lower bounds on quantum communication complexity"};
    app.require_subcommand(1);

    EntropyArgs entropy;
    auto* entropy_cmd = app.add_subcommand("entropy", "Renyi entropy of a spectrum file");
    entropy_cmd->add_option("--spectrum", entropy.spectrum, "spectrum file")->required();
    entropy_cmd->add_option("--alpha", entropy.alpha, "order (non-negative number or inf)")->required();
    entropy.out.add_to(entropy_cmd);

    FunctionArgs function;
    auto* function_cmd = app.add_subcommand("function-bound", "lower bound for a two-party function");
    auto* family_opt = function_cmd->add_option("--family", function.family, "ip or qchar")
                           ->check(CLI::IsMember({"ip", "qchar"}));
    auto* rect_opt = function_cmd->add_option("--rectangle", function.rectangle, "rectangle CSV file");
    family_opt->excludes(rect_opt);
    function_cmd->add_option("--n", function.n, "inner product input length");
    function_cmd->add_option("--q", function.q, "odd prime field size");
    function_cmd->add_option("--eps", function.eps, "error probability, 0 <= eps < 1/2")->required();
    function.out.add_to(function_cmd);

    StateArgs state;
    auto* state_cmd = app.add_subcommand("state-bound", "lower bound for a state transformation");
    state_cmd->add_option("--phi", state.phi, "initial Schmidt spectrum file")->required();
    state_cmd->add_option("--psi", state.psi, "target Schmidt spectrum file")->required();
    state_cmd->add_option("--eps", state.eps, "fidelity slack, 0 <= eps < 1");
    state_cmd->add_flag("--exact", state.exact, "exact transformation bound");
    state.out.add_to(state_cmd);

    EmbezzleArgs embezzle;
    auto* embezzle_cmd = app.add_subcommand("embezzle", "embezzlement fidelity of M(d)");
    embezzle_cmd->add_option("--target", embezzle.target_file, "target spectrum file");
    embezzle_cmd->add_option("--target-epr", embezzle.target_epr, "maximally entangled target of rank K");
    embezzle_cmd->add_option("--eps", embezzle.eps, "search for the smallest d with fidelity > 1-eps");
    embezzle_cmd->add_option("--dim", embezzle.dim, "evaluate a single dimension");
    embezzle.out.add_to(embezzle_cmd);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the seeded invariant suite");
    verify_cmd->add_option("--suite", verify.suite, "all, linalg, spectra, bounds or embezzle");
    verify_cmd->add_option("--seed", verify.seed, "master seed")->capture_default_str();
    verify.out.add_to(verify_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*entropy_cmd) {
            return run_entropy(entropy);
        }
        if (*function_cmd) {
            return run_function_bound(function);
        }
        if (*state_cmd) {
            return run_state_bound(state);
        }
        if (*embezzle_cmd) {
            return run_embezzle(embezzle);
        }
        if (*verify_cmd) {
            return run_verify(verify);
        }
    } catch (const InputError& e) {
        std::cerr << "renyicc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "renyicc: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
