#include "commands.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "casimir/validation.hpp"

namespace casimir_iso {

namespace {

using casimir::layers::EvalContext;
using casimir::layers::LayerStack;
using casimir::materials::Material;
using casimir::materials::Prescription;
using casimir::sweep::make_grid;
using casimir::sweep::map_ordered;

void write_header(std::ostream& out, const RunConfig& config,
                  const std::vector<std::string>& columns) {
    for (const auto& [key, value] : config.resolved_entries())
        out << "# " << key << " = " << value << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << "\n";
}

void write_row(std::ostream& out, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << format_value(values[i]);
    out << "\n";
}

std::string combo_name(Prescription p, bool mu_full) {
    const std::string head = p == Prescription::drude ? "drude" : "plasma";
    return head + (mu_full ? "_muFull" : "_mu1");
}

} // namespace

void run_permittivity(const RunConfig& config, std::ostream& out) {
    const Material& mat = config.resolve_material(config.material);
    const auto& eps_drude = mat.permittivity(Prescription::drude);
    const auto& eps_plasma = mat.permittivity(Prescription::plasma);

    std::optional<casimir::materials::PermittivityModel> tabulated;
    std::vector<std::string> columns = {"xi_eV", "eps_drude", "eps_plasma"};
    if (!config.table_path.empty()) {
        std::ifstream in(config.table_path);
        if (!in) throw ConfigError("cannot open optical table '" + config.table_path + "'");
        auto prescriptions = config.prescriptions();
        tabulated = casimir::materials::PermittivityModel::tabulated(
            casimir::materials::ingest_optical_data(in), mat.drude_parameters(),
            prescriptions.front());
        columns.push_back("eps_tabulated");
    }

    const auto grid =
        make_grid(config.xi_start_ev, config.xi_stop_ev, config.xi_points, config.xi_scale);
    const auto rows = map_ordered<std::vector<double>>(grid, [&](double xi) {
        std::vector<double> row = {xi, eps_drude(xi), eps_plasma(xi)};
        if (tabulated) row.push_back((*tabulated)(xi));
        return row;
    });

    write_header(out, config, columns);
    for (const auto& row : rows) write_row(out, row);
}

void run_eta(const RunConfig& config, std::ostream& out) {
    const LayerStack s1 = LayerStack::half_space(config.resolve_material(config.mat1));
    const LayerStack s2 = LayerStack::half_space(config.resolve_material(config.mat2));
    const double temperature = config.temperature_k;
    const auto& settings = config.quadrature;

    const auto grid =
        make_grid(config.a_start_um, config.a_stop_um, config.a_points, config.a_scale);
    const auto rows = map_ordered<std::array<double, 4>>(grid, [&](double a) {
        const double e_id = casimir::ideal_energy(a);
        const auto drude = casimir::lifshitz::free_energy(
            s1, s2, a, temperature, {Prescription::drude, true}, settings);
        const auto plasma = casimir::lifshitz::free_energy(
            s1, s2, a, temperature, {Prescription::plasma, true}, settings);
        return std::array<double, 4>{a, drude.total / e_id, plasma.total / e_id,
                                     (plasma.total - plasma.te_zero) / e_id};
    });

    write_header(out, config, {"a_um", "eta_drude", "eta_plasma", "eta_plasma_noTE0"});
    for (const auto& row : rows) write_row(out, {row.begin(), row.end()});
}

void run_delta(const RunConfig& config, std::ostream& out) {
    const auto setup = config.resolve_setup();
    const auto& settings = config.quadrature;

    std::vector<EvalContext> combos;
    std::vector<std::string> columns = {"a_um"};
    for (Prescription p : config.prescriptions())
        for (bool mu_full : config.mu_toggles()) {
            combos.push_back({p, mu_full});
            columns.push_back("dF_" + combo_name(p, mu_full) + "_fN");
        }

    const auto grid =
        make_grid(config.a_start_um, config.a_stop_um, config.a_points, config.a_scale);
    const auto rows = map_ordered<std::vector<double>>(grid, [&](double a) {
        std::vector<double> row = {a};
        for (const auto& ctx : combos)
            row.push_back(casimir::setups::delta_force(setup, a, ctx, settings));
        return row;
    });

    write_header(out, config, columns);
    // Advisory geometry note; the thresholds are reported, never enforced.
    out << "# validity: pfa_ok requires a < "
        << format_value(casimir::setups::ValidityReport::pfa_ratio_threshold *
                        setup.sphere_radius_um)
        << " um for R = " << format_value(setup.sphere_radius_um) << " um\n";
    for (const auto& row : rows) write_row(out, row);
}

int run_validate(const RunConfig& config, std::ostream& out) {
    const auto results = casimir::validation::run_all_checks(config.quadrature);
    bool all_pass = true;
    for (const auto& r : results) {
        out << r.id << ',' << (r.pass ? "PASS" : "FAIL") << ',' << format_value(r.measured)
            << ',' << format_value(r.bound) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? exit_ok : exit_validation;
}

int run_command(const RunConfig& config) {
    std::ofstream file;
    if (!config.out_path.empty()) {
        file.open(config.out_path, std::ios::binary); // plain '\n' line endings
        if (!file) throw ConfigError("cannot open output file '" + config.out_path + "'");
    }
    std::ostream& out = config.out_path.empty() ? std::cout : file;

    if (config.command == "permittivity") {
        run_permittivity(config, out);
    } else if (config.command == "eta") {
        run_eta(config, out);
    } else if (config.command == "delta") {
        run_delta(config, out);
    } else if (config.command == "validate") {
        return run_validate(config, out);
    } else {
        throw ConfigError("unknown command '" + config.command + "'");
    }
    if (!out) throw std::runtime_error("failed writing output");
    return exit_ok;
}

} // namespace casimir_iso
