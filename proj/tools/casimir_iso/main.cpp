#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "casimir/quadrature.hpp"
#include "commands.hpp"

namespace {

using casimir_iso::RunConfig;

struct FlagOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> setup;
    std::optional<double> a_start, a_stop;
    std::optional<int> a_points;
    std::optional<std::string> a_scale;
    std::optional<double> xi_start, xi_stop;
    std::optional<int> xi_points;
    std::optional<std::string> xi_scale;
    std::optional<std::string> prescription;
    std::optional<std::string> mu;
    std::optional<std::string> out;
    std::optional<std::string> material;
    std::optional<std::string> table;
    std::optional<std::string> mat1, mat2;
    std::optional<std::string> sphere, overlayer, substrate_b, substrate_c;
    std::optional<double> w, radius, temperature;
    std::optional<double> rel_tol, tail_factor;
    std::optional<int> l_max_cap, k_node_budget;
};

void add_flags(CLI::App* cmd, FlagOverrides& flags) {
    cmd->add_option("--config", flags.config_path, "Config file (key = value sections)");
    cmd->add_option("--setup", flags.setup, "Setup preset name");
    cmd->add_option("--a-start", flags.a_start, "Separation grid start (um)");
    cmd->add_option("--a-stop", flags.a_stop, "Separation grid stop (um)");
    cmd->add_option("--a-points", flags.a_points, "Separation grid points");
    cmd->add_option("--a-scale", flags.a_scale, "Separation grid scale: lin|log");
    cmd->add_option("--xi-start", flags.xi_start, "Frequency grid start (eV)");
    cmd->add_option("--xi-stop", flags.xi_stop, "Frequency grid stop (eV)");
    cmd->add_option("--xi-points", flags.xi_points, "Frequency grid points");
    cmd->add_option("--xi-scale", flags.xi_scale, "Frequency grid scale: lin|log");
    cmd->add_option("--prescription", flags.prescription,
                    "Zero-frequency prescription: drude|plasma|both");
    cmd->add_option("--mu", flags.mu, "Permeability toggle: full|unity|both");
    cmd->add_option("--out", flags.out, "Output file (default stdout)");
    cmd->add_option("--material", flags.material, "Material name (permittivity)");
    cmd->add_option("--table", flags.table, "Optical data table path (permittivity)");
    cmd->add_option("--mat1", flags.mat1, "First half-space material (eta)");
    cmd->add_option("--mat2", flags.mat2, "Second half-space material (eta)");
    cmd->add_option("--sphere", flags.sphere, "Inline setup: sphere coating material");
    cmd->add_option("--overlayer", flags.overlayer, "Inline setup: overlayer material");
    cmd->add_option("--substrate-b", flags.substrate_b, "Inline setup: substrate B");
    cmd->add_option("--substrate-c", flags.substrate_c, "Inline setup: substrate C");
    cmd->add_option("--w", flags.w, "Inline setup: overlayer thickness (um)");
    cmd->add_option("--radius", flags.radius, "Sphere radius (um)");
    cmd->add_option("--temperature", flags.temperature, "Temperature (K)");
    cmd->add_option("--rel-tol", flags.rel_tol, "Quadrature relative tolerance");
    cmd->add_option("--l-max-cap", flags.l_max_cap, "Matsubara index cap");
    cmd->add_option("--k-node-budget", flags.k_node_budget,
                    "Integrand evaluations per Matsubara term");
    cmd->add_option("--tail-factor", flags.tail_factor, "Truncation safety factor");
}

casimir::sweep::GridScale parse_scale(const std::string& value) {
    if (value == "lin" || value == "linear") return casimir::sweep::GridScale::linear;
    if (value == "log") return casimir::sweep::GridScale::logarithmic;
    throw casimir_iso::ConfigError("scale must be lin or log, got '" + value + "'");
}

RunConfig assemble(const std::string& command, const FlagOverrides& flags) {
    RunConfig config;
    config.command = command;
    if (flags.config_path)
        casimir_iso::apply_config_values(
            config, casimir_iso::parse_config_file(*flags.config_path));
    config.command = command; // the subcommand wins over run.command

    if (flags.setup) config.setup_name = *flags.setup;
    if (flags.a_start) config.a_start_um = *flags.a_start;
    if (flags.a_stop) config.a_stop_um = *flags.a_stop;
    if (flags.a_points) config.a_points = *flags.a_points;
    if (flags.a_scale) config.a_scale = parse_scale(*flags.a_scale);
    if (flags.xi_start) config.xi_start_ev = *flags.xi_start;
    if (flags.xi_stop) config.xi_stop_ev = *flags.xi_stop;
    if (flags.xi_points) config.xi_points = *flags.xi_points;
    if (flags.xi_scale) config.xi_scale = parse_scale(*flags.xi_scale);
    if (flags.prescription) config.prescription = *flags.prescription;
    if (flags.mu) config.mu = *flags.mu;
    if (flags.out) config.out_path = *flags.out;
    if (flags.material) config.material = *flags.material;
    if (flags.table) config.table_path = *flags.table;
    if (flags.mat1) config.mat1 = *flags.mat1;
    if (flags.mat2) config.mat2 = *flags.mat2;
    if (flags.sphere) config.sphere = *flags.sphere;
    if (flags.overlayer) config.overlayer = *flags.overlayer;
    if (flags.substrate_b) config.substrate_b = *flags.substrate_b;
    if (flags.substrate_c) config.substrate_c = *flags.substrate_c;
    if (flags.w) config.overlayer_w_um = *flags.w;
    if (flags.radius) config.radius_um = *flags.radius;
    if (flags.temperature) config.temperature_k = *flags.temperature;
    if (flags.rel_tol) config.quadrature.rel_tol = *flags.rel_tol;
    if (flags.l_max_cap) config.quadrature.l_max_cap = *flags.l_max_cap;
    if (flags.k_node_budget) config.quadrature.k_node_budget = *flags.k_node_budget;
    if (flags.tail_factor) config.quadrature.tail_factor = *flags.tail_factor;
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal Casimir free energies and isoelectronic force differences"};
    app.require_subcommand(1);
    FlagOverrides flags;
    for (const char* name : {"permittivity", "eta", "delta", "validate"})
        add_flags(app.add_subcommand(name), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return casimir_iso::exit_usage;
    }

    try {
        const RunConfig config =
            assemble(app.get_subcommands().front()->get_name(), flags);
        return casimir_iso::run_command(config);
    } catch (const casimir_iso::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir_iso::exit_usage;
    } catch (const casimir::materials::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir_iso::exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir_iso::exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return casimir_iso::exit_usage;
    } catch (const std::exception& e) {
        // convergence, quadrature and numeric failures
        std::cerr << "numeric error: " << e.what() << "\n";
        return casimir_iso::exit_numeric;
    }
}
