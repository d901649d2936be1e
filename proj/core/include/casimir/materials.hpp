#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace casimir::materials {

/// Zero-frequency extrapolation of metallic optical response.
enum class Prescription { drude, plasma };

struct DrudeParameters {
    double plasma_ev = 0.0;     // omega_p
    double relaxation_ev = 0.0; // gamma
};

/// Leading behavior of eps(i xi) as xi -> 0+:
/// order 0: eps -> coefficient; order 1: xi * eps -> coefficient;
/// order 2: xi^2 * eps -> coefficient.
struct PoleDescriptor {
    int order = 0;
    double coefficient = 1.0;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Measured imaginary part of the permittivity on a strictly increasing
/// frequency grid, omega_min > 0.
class OpticalDataTable {
  public:
    OpticalDataTable(std::vector<double> omega_ev, std::vector<double> eps_imag);

    std::size_t size() const { return omega_.size(); }
    double omega_min() const { return omega_.front(); }
    double omega_max() const { return omega_.back(); }
    const std::vector<double>& omega() const { return omega_; }
    const std::vector<double>& eps_imag() const { return eps_imag_; }

  private:
    std::vector<double> omega_;
    std::vector<double> eps_imag_;
};

/// Parse "omega_eV eps_imag" rows; '#' starts a comment, blank lines skipped.
OpticalDataTable ingest_optical_data(std::istream& in);

/// Log-spaced table sampled from the Drude loss function; used by tests and
/// by users who want a reference table.
OpticalDataTable synthetic_drude_table(const DrudeParameters& drude,
                                       double omega_min, double omega_max,
                                       int points);

namespace detail {
struct TabulatedState;
}

class PermittivityModel {
  public:
    static PermittivityModel vacuum();
    static PermittivityModel analytic_drude(const DrudeParameters& p);
    static PermittivityModel analytic_plasma(double plasma_ev);
    static PermittivityModel dielectric_oscillator(double eps_static, double resonance_ev);
    static PermittivityModel conductive_si(double eps_static, double resonance_ev,
                                           const DrudeParameters& conduction);
    static PermittivityModel tabulated(OpticalDataTable table, const DrudeParameters& drude,
                                       Prescription prescription);

    /// eps(i xi) for xi > 0 (dimensionless, >= 1).
    double operator()(double xi_ev) const;

    /// Exact xi -> 0 behavior; drives the l=0 reflection limits.
    PoleDescriptor zero_frequency() const;

  private:
    struct Vacuum {};
    struct Drude { double wp, gamma; };
    struct Plasma { double wp; };
    struct Oscillator { double eps_static, w0; };
    struct ConductiveSi { double eps_static, w0, wp, gamma; };
    struct Tabulated { std::shared_ptr<detail::TabulatedState> state; };

    using Impl = std::variant<Vacuum, Drude, Plasma, Oscillator, ConductiveSi, Tabulated>;
    explicit PermittivityModel(Impl impl) : impl_(std::move(impl)) {}
    Impl impl_;
};

class PermeabilityModel {
  public:
    static PermeabilityModel unity() { return PermeabilityModel(1.0, 0.0); }
    static PermeabilityModel debye(double mu_static, double relaxation_ev);

    /// mu(i xi) for xi >= 0; returns mu(0) exactly at xi = 0.
    double operator()(double xi_ev) const;
    double static_value() const { return mu0_; }
    bool is_unity() const { return mu0_ == 1.0; }
    double relaxation_ev() const { return wm_; }

  private:
    PermeabilityModel(double mu0, double wm) : mu0_(mu0), wm_(wm) {}
    double mu0_;
    double wm_;
};

inline double eps_imag_axis(const PermittivityModel& m, double xi_ev) { return m(xi_ev); }
inline PoleDescriptor zero_frequency_behavior(const PermittivityModel& m) {
    return m.zero_frequency();
}
inline double mu_imag_axis(const PermeabilityModel& m, double xi_ev) { return m(xi_ev); }

/// Named material: permittivity description resolvable per prescription,
/// plus a permeability model.
class Material {
  public:
    enum class Kind { metal, dielectric, conductive_dielectric, tabulated_metal };

    static Material metal(std::string name, const DrudeParameters& drude,
                          PermeabilityModel mu = PermeabilityModel::unity());
    static Material dielectric(std::string name, double eps_static, double resonance_ev);
    static Material conductive_dielectric(std::string name, double eps_static,
                                          double resonance_ev,
                                          const DrudeParameters& conduction);
    static Material tabulated_metal(std::string name, OpticalDataTable table,
                                    const DrudeParameters& extrapolation,
                                    PermeabilityModel mu = PermeabilityModel::unity());

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }
    const PermittivityModel& permittivity(Prescription p) const {
        return p == Prescription::drude ? eps_drude_ : eps_plasma_;
    }
    const PermeabilityModel& permeability() const { return mu_; }

    // descriptive parameters, used by the config round-trip
    const DrudeParameters& drude_parameters() const { return drude_; }
    double eps_static() const { return eps_static_; }
    double resonance_ev() const { return resonance_ev_; }

  private:
    Material(std::string name, Kind kind, PermittivityModel eps_drude,
             PermittivityModel eps_plasma, PermeabilityModel mu)
        : name_(std::move(name)), kind_(kind), eps_drude_(std::move(eps_drude)),
          eps_plasma_(std::move(eps_plasma)), mu_(std::move(mu)) {}

    std::string name_;
    Kind kind_;
    PermittivityModel eps_drude_;
    PermittivityModel eps_plasma_;
    PermeabilityModel mu_;
    DrudeParameters drude_{};
    double eps_static_ = 0.0;
    double resonance_ev_ = 0.0;
};

/// Built-in presets: Au, Ni, Pt, Si, Si_c. Throws std::invalid_argument for
/// unknown names.
const Material& preset(std::string_view name);
const std::vector<Material>& preset_catalog();

} // namespace casimir::materials
