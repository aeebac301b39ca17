#include <iostream>

#include <CLI11.hpp>

#include "muc/cli.hpp"

int main(int argc, char** argv) {
    muc::CliConfig cfg;
    CLI::App app{"Law checker for mixed unitary categories over exact scalars"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--model", cfg.model, "ffvec, chu, finmat or ffvec[<mutation>]")->capture_default_str();
        sub->add_option("--env", cfg.env, "environment JSON (atoms and named morphisms)");
        sub->add_option("--seed", cfg.seed, "seed for morphism draws")->capture_default_str();
        sub->add_option("--max-size", cfg.max_size, "maximum object size in leaves")->capture_default_str();
        sub->add_flag("--json", cfg.json, "JSON output");
    };

    CLI::App* laws = app.add_subcommand("laws", "run the law catalog");
    common(laws);
    laws->add_option("--law", cfg.laws, "law id, base id or prefix ending in '*' (repeatable)");
    laws->add_option("--samples", cfg.samples, "minimum draws per morphism variable")->capture_default_str();
    laws->add_option("--max-instances", cfg.max_instances, "cap on instances per law, 0 for none")
        ->capture_default_str();

    CLI::App* eval = app.add_subcommand("eval", "evaluate a morphism expression");
    common(eval);
    eval->add_option("--expr,expr", cfg.expr, "expression")->required();

    CLI::App* core = app.add_subcommand("unitary-core", "build the unitary core from generators");
    common(core);
    core->add_option("--gens", cfg.gens, "generator JSON (list of {name, object, alpha} or {name, form})");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return muc::kExitConfig;
    }

    if (laws->parsed()) return muc::cmd_laws(cfg, std::cout, std::cerr);
    if (eval->parsed()) return muc::cmd_eval(cfg, std::cout, std::cerr);
    return muc::cmd_unitary_core(cfg, std::cout, std::cerr);
}
