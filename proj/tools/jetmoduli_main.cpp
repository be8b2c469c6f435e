#include <jetmoduli/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

namespace {

void add_format(CLI::App* cmd, jetmoduli::CliConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    jetmoduli::CliConfig cfg;

    CLI::App app{"Exact moduli dimensions of jets of general affine connections"};
    app.require_subcommand(1);

    auto* dims = app.add_subcommand("dims", "Jet-space, orbit and moduli dimensions for one (n, k)");
    dims->add_option("--n", cfg.n, "Number of variables")->required();
    dims->add_option("--k", cfg.k, "Jet order")->capture_default_str();
    add_format(dims, cfg);

    auto* series = app.add_subcommand("series", "Coefficients of the generating function p(t)");
    series->add_option("--n", cfg.n, "Number of variables")->required();
    series->add_option("--terms", cfg.terms, "Number of coefficients, a_0 onward")->capture_default_str();
    add_format(series, cfg);

    auto* closed = app.add_subcommand("closed-form", "Partial fractions and combined fraction of p(t)");
    closed->add_option("--n", cfg.n, "Number of variables")->required();
    add_format(closed, cfg);

    auto* stab = app.add_subcommand("stabilizer", "Empirical stabilizer/orbit dimensions at random jets");
    stab->add_option("--n", cfg.n, "Number of variables")->required();
    stab->add_option("--k", cfg.k, "Jet order")->capture_default_str();
    stab->add_option("--seeds", cfg.seeds, "Number of consecutive seeds to sample")->capture_default_str();
    stab->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
    stab->add_option("--coeff-range", cfg.coeff_range, "Coefficients drawn from [-range, range]")
        ->capture_default_str();
    add_format(stab, cfg);

    auto* witness = app.add_subcommand("witness", "Witness connections and their stabilizer systems");
    witness->add_option("--n", cfg.n, "Number of variables")->required();
    witness->add_option("--k", cfg.k, "Witness order: 0 (constant) or 1 (first order, n = 2)")
        ->capture_default_str();
    add_format(witness, cfg);

    auto* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_flag("--deep", cfg.deep, "Extend empirical rank checks to n = 4, k = 2");
    verify->add_option("--threads", cfg.threads, "Worker threads (default: JETMODULI_THREADS or hardware)");
    add_format(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    try {
        return jetmoduli::cli_run(cfg, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
