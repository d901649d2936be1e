#include "casimir/layers.hpp"

#include <cmath>

namespace casimir::layers {

namespace {

struct MediumValues {
    double eps, mu, k;
};

MediumValues values_at(const Medium& medium, const ImaginaryMode& mode) {
    const double eps = medium.eps(mode.xi_ev);
    const double mu = medium.mu(mode.xi_ev);
    const double kz = mode.xi_ev / constants::hbar_c;
    const double k = std::sqrt(eps * mu * kz * kz + mode.k_perp_um * mode.k_perp_um);
    return {eps, mu, k};
}

double interface(Polarization pol, const MediumValues& a, const MediumValues& b) {
    if (pol == Polarization::te)
        return (b.mu * a.k - a.mu * b.k) / (b.mu * a.k + a.mu * b.k);
    return (b.eps * a.k - a.eps * b.k) / (b.eps * a.k + a.eps * b.k);
}

double compose(double r_top, double r_bottom, double damping) {
    return (r_top + damping * r_bottom) / (1.0 + damping * r_top * r_bottom);
}

// Zero-frequency data of a medium: permittivity pole, mu(0), and the xi -> 0
// limit kappa of the axial wavenumber (k_perp unless the pole is double).
struct ZeroData {
    int order;
    double coefficient;
    double mu0;
    double kappa;
};

ZeroData zero_data(const materials::Material& m, const EvalContext& ctx, double k_perp) {
    const auto pole = m.permittivity(ctx.prescription).zero_frequency();
    const double mu0 = ctx.include_permeability ? m.permeability().static_value() : 1.0;
    double kappa = k_perp;
    if (pole.order == 2) {
        const double s = mu0 * pole.coefficient / (constants::hbar_c * constants::hbar_c);
        kappa = std::sqrt(s + k_perp * k_perp);
    }
    return {pole.order, pole.coefficient, mu0, kappa};
}

double zero_interface(Polarization pol, const ZeroData& a, const ZeroData& b) {
    if (pol == Polarization::te)
        return (b.mu0 * a.kappa - a.mu0 * b.kappa) / (b.mu0 * a.kappa + a.mu0 * b.kappa);
    // TM: the medium with the stronger divergence of eps wins outright.
    if (b.order > a.order) return 1.0;
    if (a.order > b.order) return -1.0;
    return (b.coefficient * a.kappa - a.coefficient * b.kappa) /
           (b.coefficient * a.kappa + a.coefficient * b.kappa);
}

} // namespace

double axial_wavenumber(const Medium& medium, const ImaginaryMode& mode) {
    if (!(mode.xi_ev > 0.0))
        throw std::domain_error("axial_wavenumber: xi must be positive");
    return values_at(medium, mode).k;
}

double fresnel(const Medium& a, const Medium& b, Polarization pol,
               const ImaginaryMode& mode) {
    if (!(mode.xi_ev > 0.0))
        throw std::domain_error("fresnel: xi must be positive");
    return interface(pol, values_at(a, mode), values_at(b, mode));
}

double stack_reflection(const LayerStack& stack, Polarization pol,
                        const ImaginaryMode& mode, const EvalContext& ctx) {
    return stack.visit([&](const auto& body) -> double {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LayerStack::IdealMetal>) {
            if (pol == Polarization::te && !body.reflect_te) return 0.0;
            return 1.0;
        } else if constexpr (std::is_same_v<T, LayerStack::HalfSpace>) {
            if (!(mode.xi_ev > 0.0))
                throw std::domain_error("stack_reflection: xi must be positive");
            const MediumValues vac = values_at(Medium::vacuum(), mode);
            return interface(pol, vac, values_at(resolve(body.medium, ctx), mode));
        } else {
            if (!(mode.xi_ev > 0.0))
                throw std::domain_error("stack_reflection: xi must be positive");
            const MediumValues vac = values_at(Medium::vacuum(), mode);
            const MediumValues over = values_at(resolve(body.overlayer, ctx), mode);
            const MediumValues sub = values_at(resolve(body.substrate, ctx), mode);
            const double r_top = interface(pol, vac, over);
            const double r_bottom = interface(pol, over, sub);
            const double damping = std::exp(-2.0 * body.thickness_um * over.k);
            return compose(r_top, r_bottom, damping);
        }
    });
}

double zero_frequency_reflection(const LayerStack& stack, Polarization pol,
                                 double k_perp_um, const EvalContext& ctx) {
    if (!(k_perp_um > 0.0))
        throw std::domain_error("zero_frequency_reflection: k_perp must be positive");
    const ZeroData vac{0, 1.0, 1.0, k_perp_um};
    return stack.visit([&](const auto& body) -> double {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LayerStack::IdealMetal>) {
            if (pol == Polarization::te && !body.reflect_te) return 0.0;
            return 1.0;
        } else if constexpr (std::is_same_v<T, LayerStack::HalfSpace>) {
            return zero_interface(pol, vac, zero_data(body.medium, ctx, k_perp_um));
        } else {
            const ZeroData over = zero_data(body.overlayer, ctx, k_perp_um);
            const ZeroData sub = zero_data(body.substrate, ctx, k_perp_um);
            const double r_top = zero_interface(pol, vac, over);
            const double r_bottom = zero_interface(pol, over, sub);
            const double damping = std::exp(-2.0 * body.thickness_um * over.kappa);
            return compose(r_top, r_bottom, damping);
        }
    });
}

} // namespace casimir::layers
