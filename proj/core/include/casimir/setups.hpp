#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::setups {

/// Sphere of radius R coated with A above a split plate: substrates B and C
/// hidden under a shared conductive overlayer D of thickness w.
struct IsoelectronicSetup {
    std::string name;
    double sphere_radius_um;
    materials::Material coating;     // A
    materials::Material overlayer;   // D
    double overlayer_thickness_um;   // w
    materials::Material substrate_b; // B
    materials::Material substrate_c; // C
    double temperature_k;

    layers::LayerStack sphere_stack() const {
        return layers::LayerStack::half_space(coating);
    }
    layers::LayerStack plate_b() const {
        return layers::LayerStack::coated(overlayer, overlayer_thickness_um, substrate_b);
    }
    layers::LayerStack plate_c() const {
        return layers::LayerStack::coated(overlayer, overlayer_thickness_um, substrate_c);
    }
};

/// Built-in setups (fig3, fig4_5, fig6bis, fig6, fig7); names are part of the
/// CLI contract. Throws std::invalid_argument for unknown names.
const IsoelectronicSetup& preset(std::string_view name);
const std::vector<IsoelectronicSetup>& preset_catalog();

struct SetupGeometry {
    double separation_um = 0.0;        // a
    double boundary_distance_um = 0.0; // s, lateral distance from the B-C boundary
};

/// Advisory geometry report; thresholds are reported, never enforced.
struct ValidityReport {
    bool pfa_ok = false;      // a/R below pfa_ratio_threshold
    bool boundary_ok = false; // s above boundary_factor * sqrt(a R)
    double separation_over_radius = 0.0;
    double interaction_radius_um = 0.0; // rho = sqrt(a R)

    static constexpr double pfa_ratio_threshold = 0.01;
    static constexpr double boundary_factor = 10.0;
};

ValidityReport validity_check(const SetupGeometry& geometry, double sphere_radius_um);

/// PFA sphere-plate force 2 pi R F(a), reported in fN (signed; attraction is
/// negative).
double pfa_force(const layers::LayerStack& sphere_side, const layers::LayerStack& plate,
                 double separation_um, double temperature_k,
                 const layers::EvalContext& ctx, double sphere_radius_um,
                 const lifshitz::QuadratureSettings& settings = {});

/// Differential force dF = 2 pi R (F_B - F_C) in fN.
double delta_force(const IsoelectronicSetup& setup, double separation_um,
                   const layers::EvalContext& ctx,
                   const lifshitz::QuadratureSettings& settings = {});

} // namespace casimir::setups
