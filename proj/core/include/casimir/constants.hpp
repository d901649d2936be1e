#pragma once

#include <cmath>
#include <stdexcept>

namespace casimir {

// Unit conventions: energies in eV (frequencies are energies, hbar absorbed),
// lengths in um, temperatures in K. Free energy per unit area in eV um^-2.
// Forces are converted to fN exactly once, at the reporting boundary.
namespace constants {

inline constexpr double hbar_c = 0.19732697;       // eV um (CODATA)
inline constexpr double k_boltzmann = 8.6173332e-5; // eV / K (CODATA)
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double zeta3 = 1.2020569031595942854; // Riemann zeta(3)

// 1 eV/um = 1.602176634e-13 N
inline constexpr double femtonewton_per_ev_um = 160.2176634;

} // namespace constants

/// Matsubara energy xi_l = 2 pi l k_B T, in eV.
inline double matsubara_frequency(int l, double temperature_k) {
    if (!(temperature_k > 0.0))
        throw std::domain_error("matsubara_frequency: temperature must be positive");
    if (l < 0)
        throw std::domain_error("matsubara_frequency: index must be non-negative");
    return 2.0 * constants::pi * static_cast<double>(l) * constants::k_boltzmann *
           temperature_k;
}

/// Ideal-conductor T=0 energy per unit area, -pi^2 hbar c / (720 a^3), eV um^-2.
inline double ideal_energy(double separation_um) {
    if (!(separation_um > 0.0))
        throw std::domain_error("ideal_energy: separation must be positive");
    return -constants::pi * constants::pi * constants::hbar_c /
           (720.0 * separation_um * separation_um * separation_um);
}

struct ThermalState {
    double temperature_k;
    double xi1_ev;            // first Matsubara energy
    double thermal_length_um; // hbar c / xi1

    static ThermalState at(double temperature_k) {
        const double xi1 = matsubara_frequency(1, temperature_k);
        return {temperature_k, xi1, constants::hbar_c / xi1};
    }
};

} // namespace casimir
