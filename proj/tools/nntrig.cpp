#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "nntrig/cli.hpp"

int main(int argc, char** argv) {
    using nntrig::cli::JobSpec;
    using nntrig::cli::Mode;

    CLI::App app{"nntrig: certificates for nonnegative trigonometric polynomials"};
    app.require_subcommand(1);

    JobSpec spec;
    std::string mode = "exact";
    bool json_flag = false;
    std::size_t n = 0;
    std::uint64_t seed = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "Coefficient field")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--tol", spec.tol, "Relative boundary tolerance");
        sub->add_flag("--json", json_flag, "Compact JSON output (default)");
        sub->add_flag("--pretty", spec.pretty, "Indented JSON output");
        sub->add_option("--out", spec.out, "Write the report to this path");
    };

    std::map<std::string, std::string> help{
        {"check", "Classify Y as inside/boundary/outside the cone"},
        {"factor", "Outer spectral factor X with phi(X) = Y"},
        {"dis2", "Dis_2(Y), the discriminant of the lift"},
        {"resultant", "Res(P, Q) from {\"P\": poly, \"Q\": poly}"},
        {"discriminant", "Dis(P)"},
        {"mobius", "Mobius discriminant V(X)"},
        {"starlike", "Starlike test for P with P(0) = 0"},
        {"verify", "Run identity-verification suites"},
        {"examples", "Check the explicit n = 1, 2 forms of V and Dis_2"}};

    for (const auto& name : nntrig::cli::commands()) {
        auto* sub = app.add_subcommand(name, help[name]);
        common(sub);
        CLI::Option* n_opt = nullptr;
        CLI::Option* seed_opt = nullptr;
        if (name == "verify" || name == "examples") {
            n_opt = sub->add_option("--n", n, "Degree (default: the full range)");
            sub->add_option("--samples", spec.samples, "Random points per suite");
            seed_opt = sub->add_option("--seed", seed, "Seed of the counter-based sample generator");
            if (name == "verify") {
                seed_opt->required();
                sub->add_option("--lemma", spec.lemma, "1, 2, 3, oracle or all");
            }
        } else {
            sub->add_option("input", spec.input, "Inline JSON, a file path, or - for stdin")->required();
            sub->add_option("--jobs", spec.jobs, "Worker threads for batch (array) input");
        }
        sub->callback([&, name, n_opt, seed_opt] {
            spec.command = name;
            if (n_opt && n_opt->count()) spec.n = n;
            if (seed_opt && seed_opt->count()) spec.seed = seed;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    spec.mode = mode == "exact" ? Mode::exact : Mode::floating;
    return nntrig::cli::run(spec, std::cout);
}
