#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/setups.hpp"
#include "casimir/sweep.hpp"

namespace casimir_iso {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Flat "key = value" file with [section] headers; keys are exposed as
/// "section.key". '#' starts a comment. Later duplicates win.
std::map<std::string, std::string> parse_config_stream(std::istream& in);
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Everything a command run needs; defaults first, then config file values,
/// then command-line flags (strongest).
struct RunConfig {
    std::string command;
    std::string out_path; // empty -> stdout

    std::string setup_name;
    std::string sphere = "Au";
    std::string overlayer;
    double overlayer_w_um = 0.0;
    std::string substrate_b;
    std::string substrate_c;
    double radius_um = 150.0;
    double temperature_k = 300.0;

    double a_start_um = 0.5;
    double a_stop_um = 5.0;
    int a_points = 10;
    casimir::sweep::GridScale a_scale = casimir::sweep::GridScale::logarithmic;

    double xi_start_ev = 0.01;
    double xi_stop_ev = 10.0;
    int xi_points = 50;
    casimir::sweep::GridScale xi_scale = casimir::sweep::GridScale::logarithmic;

    std::string prescription = "both"; // drude | plasma | both
    std::string mu = "both";           // unity | full | both

    std::string material = "Au"; // permittivity command
    std::string table_path;      // optional optical table
    std::string mat1 = "Au";     // eta command
    std::string mat2 = "Au";

    casimir::lifshitz::QuadratureSettings quadrature;

    std::map<std::string, casimir::materials::Material> custom_materials;

    /// Prescription list in the fixed column order (drude before plasma).
    std::vector<casimir::materials::Prescription> prescriptions() const;
    /// Permeability toggles in the fixed column order (mu1 before muFull).
    std::vector<bool> mu_toggles() const;

    const casimir::materials::Material& resolve_material(const std::string& name) const;
    casimir::setups::IsoelectronicSetup resolve_setup() const;

    /// Effective settings for the CSV provenance header, sorted by key.
    std::vector<std::pair<std::string, std::string>> resolved_entries() const;
};

/// Merge "section.key" values from a parsed config file into the defaults.
void apply_config_values(RunConfig& config,
                         const std::map<std::string, std::string>& values);

/// Serialize a material as "material.<name>" config keys; parsing the result
/// reproduces the material (presets round-trip unchanged).
std::map<std::string, std::string> material_to_config(
    const casimir::materials::Material& m);
casimir::materials::Material material_from_config(
    const std::string& name, const std::map<std::string, std::string>& kv);

/// Fixed CSV float formatting: 9 significant digits, '.' decimal separator.
std::string format_value(double v);

} // namespace casimir_iso
