#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/layers.hpp"

namespace casimir::lifshitz {

struct QuadratureSettings {
    double rel_tol = 1e-8;      // per Matsubara term and for the truncation test
    int l_max_cap = 100000;     // hard cap on the Matsubara index
    int k_node_budget = 200000; // integrand evaluations per term
    double tail_factor = 10.0;  // safety margin on the geometric tail estimate

    void validate() const {
        if (!(rel_tol > 0.0) || !(rel_tol < 1e-3))
            throw std::invalid_argument(
                "quadrature settings: rel_tol must lie in (0, 1e-3)");
        if (l_max_cap < 10)
            throw std::invalid_argument("quadrature settings: l_max_cap must be >= 10");
        if (k_node_budget < 1000)
            throw std::invalid_argument(
                "quadrature settings: k_node_budget must be >= 1000");
        if (!(tail_factor >= 1.0))
            throw std::invalid_argument("quadrature settings: tail_factor must be >= 1");
    }
};

struct FreeEnergyResult {
    double total = 0.0;          // eV um^-2
    std::vector<double> per_l;   // per_l[0] == tm_zero + te_zero
    double tm_zero = 0.0;        // l=0 TM contribution
    double te_zero = 0.0;        // l=0 TE contribution
    int l_used = 0;              // highest Matsubara index summed
    double error_estimate = 0.0; // absolute, eV um^-2
};

class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, int l_reached, double tail_estimate,
                     double accumulated)
        : std::runtime_error(what), l_reached(l_reached), tail_estimate(tail_estimate),
          accumulated(accumulated) {}
    int l_reached;
    double tail_estimate;
    double accumulated;
};

class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Matsubara-sum Casimir free energy per unit area between two vacuum-facing
/// stacks at separation a, in eV um^-2. The l=0 term uses the exact
/// zero-frequency reflection limits; the sum is truncated once the geometric
/// tail estimate drops below rel_tol times the accumulated value.
FreeEnergyResult free_energy(const layers::LayerStack& s1, const layers::LayerStack& s2,
                             double separation_um, double temperature_k,
                             const layers::EvalContext& ctx,
                             const QuadratureSettings& settings = {});

/// eta = F / E_id(a).
double reduction_factor(const layers::LayerStack& s1, const layers::LayerStack& s2,
                        double separation_um, double temperature_k,
                        const layers::EvalContext& ctx,
                        const QuadratureSettings& settings = {});

/// The l=0 TE entry of the breakdown; exactly 0 for non-magnetic Drude stacks.
double te_zero_contribution(const layers::LayerStack& s1, const layers::LayerStack& s2,
                            double separation_um, double temperature_k,
                            const layers::EvalContext& ctx,
                            const QuadratureSettings& settings = {});

} // namespace casimir::lifshitz
