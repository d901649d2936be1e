#include "casimir/setups.hpp"

#include <cmath>

namespace casimir::setups {

const std::vector<IsoelectronicSetup>& preset_catalog() {
    static const std::vector<IsoelectronicSetup> catalog = [] {
        using materials::preset;
        std::vector<IsoelectronicSetup> setups;
        setups.push_back({"fig3", 150.0, preset("Au"), preset("Si_c"), 0.10,
                          preset("Si"), preset("Au"), 300.0});
        setups.push_back({"fig4_5", 150.0, preset("Ni"), preset("Au"), 0.08,
                          preset("Au"), preset("Ni"), 300.0});
        setups.push_back({"fig6bis", 150.0, preset("Ni"), preset("Pt"), 0.02,
                          preset("Pt"), preset("Ni"), 300.0});
        setups.push_back({"fig6", 150.0, preset("Ni"), preset("Si_c"), 0.10,
                          preset("Pt"), preset("Ni"), 300.0});
        setups.push_back({"fig7", 150.0, preset("Ni"), preset("Si_c"), 0.10,
                          preset("Si"), preset("Ni"), 300.0});
        return setups;
    }();
    return catalog;
}

const IsoelectronicSetup& preset(std::string_view name) {
    for (const auto& s : preset_catalog())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown setup preset: " + std::string(name));
}

ValidityReport validity_check(const SetupGeometry& geometry, double sphere_radius_um) {
    ValidityReport report;
    report.separation_over_radius = geometry.separation_um / sphere_radius_um;
    report.interaction_radius_um = std::sqrt(geometry.separation_um * sphere_radius_um);
    report.pfa_ok = report.separation_over_radius < ValidityReport::pfa_ratio_threshold;
    report.boundary_ok = geometry.boundary_distance_um >
                         ValidityReport::boundary_factor * report.interaction_radius_um;
    return report;
}

double pfa_force(const layers::LayerStack& sphere_side, const layers::LayerStack& plate,
                 double separation_um, double temperature_k,
                 const layers::EvalContext& ctx, double sphere_radius_um,
                 const lifshitz::QuadratureSettings& settings) {
    if (!(sphere_radius_um > 0.0))
        throw std::domain_error("pfa_force: sphere radius must be positive");
    const double energy = lifshitz::free_energy(sphere_side, plate, separation_um,
                                                temperature_k, ctx, settings)
                              .total;
    return 2.0 * constants::pi * sphere_radius_um * energy *
           constants::femtonewton_per_ev_um;
}

double delta_force(const IsoelectronicSetup& setup, double separation_um,
                   const layers::EvalContext& ctx,
                   const lifshitz::QuadratureSettings& settings) {
    const layers::LayerStack sphere = setup.sphere_stack();
    const double f_b = lifshitz::free_energy(sphere, setup.plate_b(), separation_um,
                                             setup.temperature_k, ctx, settings)
                           .total;
    const double f_c = lifshitz::free_energy(sphere, setup.plate_c(), separation_um,
                                             setup.temperature_k, ctx, settings)
                           .total;
    return 2.0 * constants::pi * setup.sphere_radius_um * (f_b - f_c) *
           constants::femtonewton_per_ev_um;
}

} // namespace casimir::setups
