#pragma once

#include <variant>

#include "casimir/constants.hpp"
#include "casimir/materials.hpp"

namespace casimir::layers {

enum class Polarization { te, tm };

/// One Matsubara quadrature point. q_l is the vacuum axial wavenumber.
struct ImaginaryMode {
    int index = 0;        // l
    double xi_ev = 0.0;   // xi_l
    double k_perp_um = 0.0;

    double q_um() const {
        const double kz = xi_ev / constants::hbar_c;
        return std::sqrt(kz * kz + k_perp_um * k_perp_um);
    }
};

/// Evaluation context: zero-frequency prescription plus the permeability
/// toggle (full inclusion of mu vs mu == 1 everywhere).
struct EvalContext {
    materials::Prescription prescription = materials::Prescription::drude;
    bool include_permeability = true;
};

/// Permittivity/permeability pair resolved for evaluation.
struct Medium {
    materials::PermittivityModel eps;
    materials::PermeabilityModel mu;

    static Medium vacuum() {
        return {materials::PermittivityModel::vacuum(),
                materials::PermeabilityModel::unity()};
    }
};

inline Medium resolve(const materials::Material& m, const EvalContext& ctx) {
    return {m.permittivity(ctx.prescription),
            ctx.include_permeability ? m.permeability()
                                     : materials::PermeabilityModel::unity()};
}

/// k_l = sqrt(eps mu xi_l^2 / (hbar c)^2 + k_perp^2), in um^-1. Requires xi > 0.
double axial_wavenumber(const Medium& medium, const ImaginaryMode& mode);

/// Interface reflection coefficient from medium a into medium b at i xi_l.
double fresnel(const Medium& a, const Medium& b, Polarization pol,
               const ImaginaryMode& mode);

/// Vacuum-facing planar body: half-space, overlayer on a substrate, or the
/// ideal-metal test hook (reflection forced to 1; TE optionally disabled).
class LayerStack {
  public:
    struct HalfSpace { materials::Material medium; };
    struct Coated {
        materials::Material overlayer;
        double thickness_um;
        materials::Material substrate;
    };
    struct IdealMetal { bool reflect_te; };

    static LayerStack half_space(materials::Material medium) {
        return LayerStack(HalfSpace{std::move(medium)});
    }
    static LayerStack coated(materials::Material overlayer, double thickness_um,
                             materials::Material substrate) {
        if (!(thickness_um > 0.0))
            throw std::invalid_argument("layer stack: overlayer thickness must be positive");
        return LayerStack(Coated{std::move(overlayer), thickness_um, std::move(substrate)});
    }
    static LayerStack ideal_metal(bool reflect_te = true) {
        return LayerStack(IdealMetal{reflect_te});
    }

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), body_);
    }

  private:
    using Body = std::variant<HalfSpace, Coated, IdealMetal>;
    explicit LayerStack(Body body) : body_(std::move(body)) {}
    Body body_;
};

/// Reflection coefficient of the stack at i xi_l (xi_l > 0).
double stack_reflection(const LayerStack& stack, Polarization pol,
                        const ImaginaryMode& mode, const EvalContext& ctx);

/// Exact xi -> 0 limit of the stack reflection, driven by the permittivity
/// pole descriptors and mu(0); never evaluated at a small finite xi.
double zero_frequency_reflection(const LayerStack& stack, Polarization pol,
                                 double k_perp_um, const EvalContext& ctx);

} // namespace casimir::layers
