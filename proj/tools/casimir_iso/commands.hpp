#pragma once

#include <iosfwd>

#include "config.hpp"

namespace casimir_iso {

// Exit codes of the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;      // usage / config errors
inline constexpr int exit_numeric = 2;    // numeric / convergence errors
inline constexpr int exit_validation = 3; // validation failures

/// xi sweep of eps(i xi): columns xi_eV, eps_drude, eps_plasma and, when an
/// optical table is configured, eps_tabulated.
void run_permittivity(const RunConfig& config, std::ostream& out);

/// Reduction-factor sweep for two half-space materials: columns a_um,
/// eta_drude, eta_plasma, eta_plasma_noTE0.
void run_eta(const RunConfig& config, std::ostream& out);

/// Differential-force sweep: columns a_um plus one dF column per requested
/// prescription x mu combination, fixed order drude_mu1, drude_muFull,
/// plasma_mu1, plasma_muFull.
void run_delta(const RunConfig& config, std::ostream& out);

/// Run every registered check; one "id,status,measured,bound" line each.
/// Returns exit_validation when any check fails.
int run_validate(const RunConfig& config, std::ostream& out);

/// Dispatch on config.command, writing to config.out_path or stdout.
int run_command(const RunConfig& config);

} // namespace casimir_iso
