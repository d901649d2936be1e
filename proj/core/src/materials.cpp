#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::materials {

namespace {

constexpr double pi = constants::pi;

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

// Imaginary part of the Drude permittivity on the real axis.
double drude_loss(double omega, double wp, double gamma) {
    return wp * wp * gamma / (omega * (omega * omega + gamma * gamma));
}

// (1 - atan(x)/x) / x^2, stable for small x.
double tail_shape(double x) {
    if (x < 0.05) {
        const double x2 = x * x;
        return 1.0 / 3.0 - x2 / 5.0 + x2 * x2 / 7.0 - x2 * x2 * x2 / 9.0;
    }
    return (1.0 - std::atan(x) / x) / (x * x);
}

} // namespace

namespace detail {

struct TabulatedState {
    OpticalDataTable table;
    DrudeParameters drude;
    Prescription prescription;
    double tail_coefficient; // eps''(w_max) * w_max^3

    mutable std::shared_mutex cache_mutex;
    mutable std::unordered_map<double, double> cache;

    TabulatedState(OpticalDataTable t, const DrudeParameters& d, Prescription p)
        : table(std::move(t)), drude(d), prescription(p),
          tail_coefficient(table.eps_imag().back() * table.omega_max() *
                           table.omega_max() * table.omega_max()) {}

    double evaluate(double xi) const {
        {
            std::shared_lock lock(cache_mutex);
            if (auto it = cache.find(xi); it != cache.end()) return it->second;
        }
        const double value = compute(xi);
        {
            std::unique_lock lock(cache_mutex);
            cache.emplace(xi, value);
        }
        return value;
    }

    double compute(double xi) const {
        const auto& w = table.omega();
        const auto& loss = table.eps_imag();
        std::vector<double> integrand(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            integrand[i] = w[i] * loss[i] / (w[i] * w[i] + xi * xi);
        const double data_part =
            (2.0 / pi) * quadrature::trapezoid_log_grid(w, integrand);

        const double wmax = table.omega_max();
        const double tail_part = (2.0 / pi) * tail_coefficient /
                                 (wmax * wmax * wmax) * tail_shape(xi / wmax);

        const double wp = drude.plasma_ev;
        const double gamma = drude.relaxation_ev;
        const double wmin = table.omega_min();
        quadrature::Result low;
        try {
            low = quadrature::integrate_adaptive(
                [&](double omega) {
                    return wp * wp * gamma /
                           ((omega * omega + gamma * gamma) * (omega * omega + xi * xi));
                },
                0.0, wmin, 1e-8, 0.0, 100000);
        } catch (const quadrature::QuadratureError& e) {
            throw quadrature::QuadratureError(
                "tabulated permittivity: low-frequency segment did not converge at xi=" +
                    std::to_string(xi),
                e.value, e.error, e.evaluations);
        }
        const double low_part = (2.0 / pi) * low.value;

        if (prescription == Prescription::drude)
            return 1.0 + low_part + data_part + tail_part;
        const double drude_above_wmin = wp * wp / (xi * (xi + gamma)) - low_part;
        return 1.0 + wp * wp / (xi * xi) + data_part + tail_part - drude_above_wmin;
    }
};

} // namespace detail

OpticalDataTable::OpticalDataTable(std::vector<double> omega_ev,
                                   std::vector<double> eps_imag)
    : omega_(std::move(omega_ev)), eps_imag_(std::move(eps_imag)) {
    if (omega_.size() != eps_imag_.size())
        invalid("optical data: column length mismatch");
    if (omega_.size() < 2) invalid("optical data: need at least 2 rows");
    if (!(omega_.front() > 0.0)) invalid("optical data: frequencies must be positive");
    for (std::size_t i = 0; i + 1 < omega_.size(); ++i)
        if (!(omega_[i + 1] > omega_[i]))
            invalid("optical data: frequencies must be strictly increasing");
    for (double v : eps_imag_)
        if (!(v >= 0.0)) invalid("optical data: eps'' must be non-negative");
}

OpticalDataTable ingest_optical_data(std::istream& in) {
    std::vector<double> omega, loss;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream line(raw);
        double w = 0.0, e = 0.0;
        if (!(line >> w)) continue; // blank or comment-only
        if (!(line >> e)) throw ParseError("expected two columns", line_no);
        std::string trailing;
        if (line >> trailing) throw ParseError("unexpected trailing token", line_no);
        if (!(w > 0.0)) throw ParseError("frequency must be positive", line_no);
        if (!omega.empty() && !(w > omega.back()))
            throw ParseError("frequencies must be strictly increasing", line_no);
        if (!(e >= 0.0)) throw ParseError("eps'' must be non-negative", line_no);
        omega.push_back(w);
        loss.push_back(e);
    }
    if (omega.size() < 2) throw ParseError("need at least 2 data rows", line_no);
    return OpticalDataTable(std::move(omega), std::move(loss));
}

OpticalDataTable synthetic_drude_table(const DrudeParameters& drude, double omega_min,
                                       double omega_max, int points) {
    if (!(omega_min > 0.0) || !(omega_max > omega_min) || points < 2)
        invalid("synthetic_drude_table: bad grid");
    std::vector<double> omega(points), loss(points);
    const double step = std::log(omega_max / omega_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        omega[i] = omega_min * std::exp(step * i);
        loss[i] = drude_loss(omega[i], drude.plasma_ev, drude.relaxation_ev);
    }
    omega.back() = omega_max; // exact endpoint
    loss.back() = drude_loss(omega_max, drude.plasma_ev, drude.relaxation_ev);
    return OpticalDataTable(std::move(omega), std::move(loss));
}

PermittivityModel PermittivityModel::vacuum() { return PermittivityModel(Impl{Vacuum{}}); }

PermittivityModel PermittivityModel::analytic_drude(const DrudeParameters& p) {
    if (!(p.plasma_ev > 0.0)) invalid("drude model: plasma energy must be positive");
    if (!(p.relaxation_ev >= 0.0)) invalid("drude model: relaxation must be >= 0");
    return PermittivityModel(Impl{Drude{p.plasma_ev, p.relaxation_ev}});
}

PermittivityModel PermittivityModel::analytic_plasma(double plasma_ev) {
    if (!(plasma_ev > 0.0)) invalid("plasma model: plasma energy must be positive");
    return PermittivityModel(Impl{Plasma{plasma_ev}});
}

PermittivityModel PermittivityModel::dielectric_oscillator(double eps_static,
                                                           double resonance_ev) {
    if (!(eps_static > 1.0)) invalid("oscillator model: eps_static must exceed 1");
    if (!(resonance_ev > 0.0)) invalid("oscillator model: resonance must be positive");
    return PermittivityModel(Impl{Oscillator{eps_static, resonance_ev}});
}

PermittivityModel PermittivityModel::conductive_si(double eps_static, double resonance_ev,
                                                   const DrudeParameters& conduction) {
    if (!(eps_static > 1.0)) invalid("conductive-si model: eps_static must exceed 1");
    if (!(resonance_ev > 0.0)) invalid("conductive-si model: resonance must be positive");
    if (!(conduction.plasma_ev > 0.0))
        invalid("conductive-si model: plasma energy must be positive");
    if (!(conduction.relaxation_ev >= 0.0))
        invalid("conductive-si model: relaxation must be >= 0");
    return PermittivityModel(Impl{ConductiveSi{eps_static, resonance_ev,
                                               conduction.plasma_ev,
                                               conduction.relaxation_ev}});
}

PermittivityModel PermittivityModel::tabulated(OpticalDataTable table,
                                               const DrudeParameters& drude,
                                               Prescription prescription) {
    if (!(drude.plasma_ev > 0.0))
        invalid("tabulated model: plasma energy must be positive");
    if (!(drude.relaxation_ev > 0.0))
        invalid("tabulated model: relaxation must be positive");
    return PermittivityModel(Impl{Tabulated{std::make_shared<detail::TabulatedState>(
        std::move(table), drude, prescription)}});
}

double PermittivityModel::operator()(double xi) const {
    if (!(xi > 0.0))
        throw std::domain_error(
            "eps_imag_axis: xi must be positive (use zero_frequency for the limit)");
    return std::visit(
        [xi](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Vacuum>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, Drude>) {
                return 1.0 + m.wp * m.wp / (xi * (xi + m.gamma));
            } else if constexpr (std::is_same_v<T, Plasma>) {
                return 1.0 + m.wp * m.wp / (xi * xi);
            } else if constexpr (std::is_same_v<T, Oscillator>) {
                return 1.0 + (m.eps_static - 1.0) / (1.0 + xi * xi / (m.w0 * m.w0));
            } else if constexpr (std::is_same_v<T, ConductiveSi>) {
                return 1.0 + (m.eps_static - 1.0) / (1.0 + xi * xi / (m.w0 * m.w0)) +
                       m.wp * m.wp / (xi * (xi + m.gamma));
            } else {
                return m.state->evaluate(xi);
            }
        },
        impl_);
}

PoleDescriptor PermittivityModel::zero_frequency() const {
    return std::visit(
        [](const auto& m) -> PoleDescriptor {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Vacuum>) {
                return {0, 1.0};
            } else if constexpr (std::is_same_v<T, Drude>) {
                if (m.gamma > 0.0) return {1, m.wp * m.wp / m.gamma};
                return {2, m.wp * m.wp};
            } else if constexpr (std::is_same_v<T, Plasma>) {
                return {2, m.wp * m.wp};
            } else if constexpr (std::is_same_v<T, Oscillator>) {
                return {0, m.eps_static};
            } else if constexpr (std::is_same_v<T, ConductiveSi>) {
                if (m.gamma > 0.0) return {1, m.wp * m.wp / m.gamma};
                return {2, m.wp * m.wp};
            } else {
                const auto& s = *m.state;
                const double wp = s.drude.plasma_ev;
                if (s.prescription == Prescription::drude)
                    return {1, wp * wp / s.drude.relaxation_ev};
                return {2, wp * wp};
            }
        },
        impl_);
}

PermeabilityModel PermeabilityModel::debye(double mu_static, double relaxation_ev) {
    if (!(mu_static >= 1.0)) invalid("debye permeability: mu(0) must be >= 1");
    if (!(relaxation_ev > 0.0)) invalid("debye permeability: relaxation must be positive");
    return PermeabilityModel(mu_static, relaxation_ev);
}

double PermeabilityModel::operator()(double xi) const {
    if (!(xi >= 0.0)) throw std::domain_error("mu_imag_axis: xi must be >= 0");
    if (mu0_ == 1.0) return 1.0;
    if (xi == 0.0) return mu0_;
    return 1.0 + (mu0_ - 1.0) / (1.0 + xi / wm_);
}

Material Material::metal(std::string name, const DrudeParameters& drude,
                         PermeabilityModel mu) {
    Material m(std::move(name), Kind::metal, PermittivityModel::analytic_drude(drude),
               PermittivityModel::analytic_plasma(drude.plasma_ev), std::move(mu));
    m.drude_ = drude;
    return m;
}

Material Material::dielectric(std::string name, double eps_static, double resonance_ev) {
    auto eps = PermittivityModel::dielectric_oscillator(eps_static, resonance_ev);
    Material m(std::move(name), Kind::dielectric, eps, eps, PermeabilityModel::unity());
    m.eps_static_ = eps_static;
    m.resonance_ev_ = resonance_ev;
    return m;
}

Material Material::conductive_dielectric(std::string name, double eps_static,
                                         double resonance_ev,
                                         const DrudeParameters& conduction) {
    // Plasma prescription drops the conduction relaxation.
    Material m(std::move(name), Kind::conductive_dielectric,
               PermittivityModel::conductive_si(eps_static, resonance_ev, conduction),
               PermittivityModel::conductive_si(eps_static, resonance_ev,
                                                {conduction.plasma_ev, 0.0}),
               PermeabilityModel::unity());
    m.drude_ = conduction;
    m.eps_static_ = eps_static;
    m.resonance_ev_ = resonance_ev;
    return m;
}

Material Material::tabulated_metal(std::string name, OpticalDataTable table,
                                   const DrudeParameters& extrapolation,
                                   PermeabilityModel mu) {
    OpticalDataTable copy = table;
    Material m(std::move(name), Kind::tabulated_metal,
               PermittivityModel::tabulated(std::move(copy), extrapolation,
                                            Prescription::drude),
               PermittivityModel::tabulated(std::move(table), extrapolation,
                                            Prescription::plasma),
               std::move(mu));
    m.drude_ = extrapolation;
    return m;
}

const std::vector<Material>& preset_catalog() {
    static const std::vector<Material> catalog = [] {
        std::vector<Material> mats;
        mats.push_back(Material::metal("Au", {8.9, 0.035}));
        mats.push_back(Material::metal("Ni", {4.89, 0.0436},
                                       PermeabilityModel::debye(110.0, 1e-10)));
        mats.push_back(Material::metal("Pt", {5.1, 0.07}));
        mats.push_back(Material::dielectric("Si", 11.67, 4.34));
        mats.push_back(Material::conductive_dielectric("Si_c", 11.67, 4.34, {0.46, 0.1}));
        return mats;
    }();
    return catalog;
}

const Material& preset(std::string_view name) {
    for (const auto& m : preset_catalog())
        if (m.name() == name) return m;
    throw std::invalid_argument("unknown material preset: " + std::string(name));
}

} // namespace casimir::materials
