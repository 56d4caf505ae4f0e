#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cavpol/config.hpp"
#include "cavpol/errors.hpp"

namespace {

using Runner = void (*)(const cavpol::cli::LoadedConfig&, bool, std::ostream&);

struct Command {
    const char* name;
    const char* description;
    Runner run;
};

constexpr Command commands[] = {
    {"spectrum", "Reflectance/transmittance spectrum of a layer stack", cavpol::cli::run_spectrum},
    {"coupling-sweep", "Coupling constant vs mirror contrast and cavity order",
     cavpol::cli::run_coupling_sweep},
    {"polariton", "Variational polariton maps and branch energies", cavpol::cli::run_polariton},
    {"td-sweep", "Dissociation temperature vs coupling constant", cavpol::cli::run_td_sweep},
    {"phase-diagram", "Condensation phase diagram with T_d and n_s boundaries",
     cavpol::cli::run_phase_diagram},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cavpol: GaAs microcavity polariton design calculations"};
    app.require_subcommand(1);

    struct Invocation {
        std::string config_path;
        bool dry_run = false;
        Runner run = nullptr;
    } invocation;

    for (const Command& cmd : commands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
        sub->add_option("config", invocation.config_path, "JSON config file")->required();
        sub->add_flag("--dry-run", invocation.dry_run,
                      "Validate the config and print the resolved parameters");
        sub->callback([&invocation, &cmd] { invocation.run = cmd.run; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        cavpol::cli::LoadedConfig cfg = cavpol::cli::load_config(invocation.config_path);
        invocation.run(cfg, invocation.dry_run, std::cout);
    } catch (const cavpol::invalid_input& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const cavpol::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
