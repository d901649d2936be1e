#include "casimir/lifshitz.hpp"

#include <cmath>

#include "casimir/quadrature.hpp"

namespace casimir::lifshitz {

namespace {

using layers::Polarization;

// Integration window above t_l; the integrand carries e^{-t}, so the
// truncated mass is below 1e-26 of the peak.
constexpr double t_window = 60.0;

} // namespace

FreeEnergyResult free_energy(const layers::LayerStack& s1, const layers::LayerStack& s2,
                             double a, double temperature_k,
                             const layers::EvalContext& ctx,
                             const QuadratureSettings& settings) {
    settings.validate();
    if (!(a > 0.0)) throw std::domain_error("free_energy: separation must be positive");
    if (!(temperature_k > 0.0))
        throw std::domain_error("free_energy: temperature must be positive");

    const double kT = constants::k_boltzmann * temperature_k;
    const double prefactor = kT / (8.0 * constants::pi * a * a);
    const double xi1 = matsubara_frequency(1, temperature_k);
    const double t1 = 2.0 * a * xi1 / constants::hbar_c;
    const double decay = std::exp(-t1);

    FreeEnergyResult result;
    double quad_error = 0.0;

    // l = 0: half weight, exact zero-frequency reflection limits.
    auto zero_term = [&](Polarization pol) {
        auto integrand = [&](double t) {
            const double k_perp = t / (2.0 * a);
            const double product = layers::zero_frequency_reflection(s1, pol, k_perp, ctx) *
                                   layers::zero_frequency_reflection(s2, pol, k_perp, ctx) *
                                   std::exp(-t);
            return t * std::log1p(-product);
        };
        return quadrature::integrate_adaptive(integrand, 0.0, t_window, settings.rel_tol,
                                              0.0, settings.k_node_budget);
    };
    const auto tm0 = zero_term(Polarization::tm);
    const auto te0 = zero_term(Polarization::te);
    result.tm_zero = 0.5 * prefactor * tm0.value;
    result.te_zero = 0.5 * prefactor * te0.value;
    quad_error += 0.5 * prefactor * (tm0.error + te0.error);
    result.total = result.tm_zero + result.te_zero;
    result.per_l.push_back(result.total);

    // l >= 1, accumulated in increasing l.
    double tail_estimate = 0.0;
    int l = 1;
    for (;; ++l) {
        if (l > settings.l_max_cap)
            throw ConvergenceError(
                "free_energy: Matsubara cap " + std::to_string(settings.l_max_cap) +
                    " reached before the tail criterion (tail estimate " +
                    std::to_string(tail_estimate) + ")",
                l - 1, tail_estimate, result.total);

        const double xi = matsubara_frequency(l, temperature_k);
        const double t_l = 2.0 * a * xi / constants::hbar_c;
        auto integrand = [&](double t) {
            const double k_perp =
                std::sqrt(std::max(t - t_l, 0.0) * (t + t_l)) / (2.0 * a);
            const layers::ImaginaryMode mode{l, xi, k_perp};
            const double damp = std::exp(-t);
            double sum = 0.0;
            for (Polarization pol : {Polarization::tm, Polarization::te}) {
                const double product = layers::stack_reflection(s1, pol, mode, ctx) *
                                       layers::stack_reflection(s2, pol, mode, ctx) * damp;
                sum += std::log1p(-product);
            }
            return t * sum;
        };
        const auto res = quadrature::integrate_adaptive(
            integrand, t_l, t_l + t_window, settings.rel_tol, 0.0, settings.k_node_budget);
        if (!std::isfinite(res.value))
            throw NumericError("free_energy: non-finite Matsubara term at l=" +
                               std::to_string(l));

        const double term = prefactor * res.value;
        result.total += term;
        result.per_l.push_back(term);
        quad_error += prefactor * res.error;

        tail_estimate = std::abs(term) * decay / (1.0 - decay);
        if (settings.tail_factor * tail_estimate <=
            settings.rel_tol * std::abs(result.total))
            break;
    }

    result.l_used = l;
    result.error_estimate = settings.tail_factor * tail_estimate + quad_error;
    return result;
}

double reduction_factor(const layers::LayerStack& s1, const layers::LayerStack& s2,
                        double a, double temperature_k, const layers::EvalContext& ctx,
                        const QuadratureSettings& settings) {
    return free_energy(s1, s2, a, temperature_k, ctx, settings).total / ideal_energy(a);
}

double te_zero_contribution(const layers::LayerStack& s1, const layers::LayerStack& s2,
                            double a, double temperature_k,
                            const layers::EvalContext& ctx,
                            const QuadratureSettings& settings) {
    return free_energy(s1, s2, a, temperature_k, ctx, settings).te_zero;
}

} // namespace casimir::lifshitz
