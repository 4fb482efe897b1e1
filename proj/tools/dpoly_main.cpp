// Command-line front end: load a Lie pair, run the verification suites,
// emit deterministic reports.
//
// Exit codes: 0 all requested checks pass, 1 a mathematical check failed,
// 2 input or usage error.

#include "dpoly/reports.hpp"
#include "dpoly/uea.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

namespace {

struct RunConfig {
    std::string pair_file;
    int max_weight = 3;
    int max_degree = 3;
    std::string antipode = "auto";
    std::string format = "text";
    std::uint64_t seed = 0;
};

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

void emit(const RunConfig& cfg, const std::string& name, const nlohmann::json& body)
{
    if (cfg.format == "json") {
        nlohmann::json wrapper;
        wrapper[name] = body;
        std::cout << wrapper.dump(2) << "\n";
    } else {
        std::cout << name << ":\n" << dpoly::to_text(body, 1);
    }
}

dpoly::TruncationSpec spec_of(const RunConfig& cfg)
{
    return dpoly::TruncationSpec{cfg.max_weight, cfg.max_degree};
}

dpoly::ConventionMode convention_of(const RunConfig& cfg)
{
    if (cfg.antipode == "paper")
        return dpoly::ConventionMode::Paper;
    if (cfg.antipode == "standard")
        return dpoly::ConventionMode::Standard;
    return dpoly::ConventionMode::Auto;
}

// Loads and validates; on invalid math prints the violation report.
// Returns the pair or nullopt (exit code goes in `code`).
std::optional<dpoly::LiePair> load_pair(const RunConfig& cfg, int& code)
{
    auto result = dpoly::load_lie_pair_file(cfg.pair_file);
    if (!result.ok()) {
        emit(cfg, "validate", dpoly::to_json(result));
        code = kExitMathFailure;
        return std::nullopt;
    }
    return result.pair;
}

int cmd_validate(const RunConfig& cfg)
{
    auto result = dpoly::load_lie_pair_file(cfg.pair_file);
    emit(cfg, "validate", dpoly::to_json(result));
    return result.ok() ? kExitOk : kExitMathFailure;
}

int cmd_cohomology(const RunConfig& cfg)
{
    int code = kExitOk;
    auto pair = load_pair(cfg, code);
    if (!pair)
        return code;
    dpoly::UEnv env(*pair);
    auto suite = dpoly::cohomology_suite(env, spec_of(cfg));
    emit(cfg, "cohomology", dpoly::to_json(suite));
    return suite.comparison_pass ? kExitOk : kExitMathFailure;
}

int cmd_hopf(const RunConfig& cfg)
{
    int code = kExitOk;
    auto pair = load_pair(cfg, code);
    if (!pair)
        return code;
    dpoly::UEnv env(*pair);
    auto report = dpoly::hopf_axiom_report(env, spec_of(cfg), convention_of(cfg));
    emit(cfg, "hopf", dpoly::to_json(report));
    return report.pass ? kExitOk : kExitMathFailure;
}

int cmd_hkr(const RunConfig& cfg)
{
    int code = kExitOk;
    auto pair = load_pair(cfg, code);
    if (!pair)
        return code;
    dpoly::UEnv env(*pair);
    auto report = dpoly::hkr_check(env, spec_of(cfg));
    emit(cfg, "hkr", dpoly::to_json(report));
    return report.pass ? kExitOk : kExitMathFailure;
}

int cmd_atiyah(const RunConfig& cfg)
{
    int code = kExitOk;
    auto pair = load_pair(cfg, code);
    if (!pair)
        return code;
    auto report = dpoly::atiyah_report(*pair, cfg.seed);
    emit(cfg, "atiyah", dpoly::to_json(report));
    return report.pass ? kExitOk : kExitMathFailure;
}

int cmd_freelie(const RunConfig& cfg)
{
    int code = kExitOk;
    auto pair = load_pair(cfg, code);
    if (!pair)
        return code;
    dpoly::UEnv env(*pair);
    nlohmann::json body;
    auto iso = dpoly::verify_I_iso(env, spec_of(cfg));
    auto stability = dpoly::d_stability_check(env, spec_of(cfg), cfg.seed);
    auto compat = dpoly::bracket_compatibility_check(env, spec_of(cfg));
    body["symmetrization"] = dpoly::to_json(iso);
    body["d_stability"] = dpoly::to_json(stability);
    body["bracket_compatibility"] = dpoly::to_json(compat);
    const bool pass = iso.pass && stability.pass && compat.pass;
    body["pass"] = pass;
    emit(cfg, "freelie", body);
    return pass ? kExitOk : kExitMathFailure;
}

int cmd_report(const RunConfig& cfg)
{
    auto result = dpoly::load_lie_pair_file(cfg.pair_file);
    nlohmann::json body;
    body["pair"] = cfg.pair_file;
    body["config"] = {{"max_weight", cfg.max_weight},
                      {"max_degree", cfg.max_degree},
                      {"antipode", cfg.antipode},
                      {"seed", cfg.seed}};
    body["validate"] = dpoly::to_json(result);
    if (!result.ok()) {
        body["summary"] = {{"verdict", "fail"}, {"failures", nlohmann::json::array({"validate"})}};
        emit(cfg, "report", body);
        return kExitMathFailure;
    }

    dpoly::UEnv env(*result.pair);
    const auto spec = spec_of(cfg);
    std::vector<std::string> failures;

    auto cohomology = dpoly::cohomology_suite(env, spec);
    body["cohomology"] = dpoly::to_json(cohomology);
    if (!cohomology.comparison_pass)
        failures.push_back("cohomology");

    auto hopf = dpoly::hopf_axiom_report(env, spec, convention_of(cfg));
    body["hopf"] = dpoly::to_json(hopf);
    if (!hopf.pass)
        failures.push_back("hopf");

    auto hkr = dpoly::hkr_check(env, spec);
    body["hkr"] = dpoly::to_json(hkr);
    if (!hkr.pass)
        failures.push_back("hkr");

    nlohmann::json freelie;
    auto iso = dpoly::verify_I_iso(env, spec);
    auto stability = dpoly::d_stability_check(env, spec, cfg.seed);
    auto compat = dpoly::bracket_compatibility_check(env, spec);
    freelie["symmetrization"] = dpoly::to_json(iso);
    freelie["d_stability"] = dpoly::to_json(stability);
    freelie["bracket_compatibility"] = dpoly::to_json(compat);
    freelie["pass"] = iso.pass && stability.pass && compat.pass;
    body["freelie"] = freelie;
    if (!(iso.pass && stability.pass && compat.pass))
        failures.push_back("freelie");

    auto atiyah = dpoly::atiyah_report(*result.pair, cfg.seed);
    body["atiyah"] = dpoly::to_json(atiyah);
    if (!atiyah.pass)
        failures.push_back("atiyah");

    body["summary"] = {{"verdict", failures.empty() ? "pass" : "fail"}, {"failures", failures}};
    emit(cfg, "report", body);
    return failures.empty() ? kExitOk : kExitMathFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification suites for the polydifferential complex of a Lie pair"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--pair", cfg.pair_file, "Lie pair JSON file")->required();
    app.add_option("--max-weight", cfg.max_weight, "leg weight cap of the truncated model")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-degree", cfg.max_degree, "tensor degree cap of the truncated model")
        ->check(CLI::PositiveNumber);
    app.add_option("--antipode", cfg.antipode, "antipode sign convention")
        ->check(CLI::IsMember({"paper", "standard", "auto"}));
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for sampled property checks");

    auto* validate = app.add_subcommand("validate", "check the structure-constant table");
    auto* hopf = app.add_subcommand("hopf", "chain-level Hopf axiom table");
    auto* hkr = app.add_subcommand("hkr", "skew-symmetrization cocycle and class checks");
    auto* cohomology = app.add_subcommand("cohomology", "truncated-model cohomology table with oracle");
    auto* atiyah = app.add_subcommand("atiyah", "curvature cocycle, class, connection independence");
    auto* freelie = app.add_subcommand("freelie", "free Lie basis, symmetrization, compatibility");
    auto* report = app.add_subcommand("report", "all suites with a summary verdict");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(cfg);
        if (hopf->parsed())
            return cmd_hopf(cfg);
        if (hkr->parsed())
            return cmd_hkr(cfg);
        if (cohomology->parsed())
            return cmd_cohomology(cfg);
        if (atiyah->parsed())
            return cmd_atiyah(cfg);
        if (freelie->parsed())
            return cmd_freelie(cfg);
        if (report->parsed())
            return cmd_report(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
