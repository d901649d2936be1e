#include "config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace casimir_iso {

namespace {

using casimir::materials::DrudeParameters;
using casimir::materials::Material;
using casimir::materials::PermeabilityModel;
using casimir::materials::Prescription;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("config: invalid number for " + key + ": '" + value + "'");
    }
    if (used != value.size())
        throw ConfigError("config: invalid number for " + key + ": '" + value + "'");
    return v;
}

int to_int(const std::string& key, const std::string& value) {
    const double v = to_double(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("config: expected integer for " + key + ": '" + value + "'");
    return i;
}

casimir::sweep::GridScale to_scale(const std::string& key, const std::string& value) {
    if (value == "lin" || value == "linear") return casimir::sweep::GridScale::linear;
    if (value == "log") return casimir::sweep::GridScale::logarithmic;
    throw ConfigError("config: " + key + " must be lin or log, got '" + value + "'");
}

std::string scale_name(casimir::sweep::GridScale s) {
    return s == casimir::sweep::GridScale::linear ? "lin" : "log";
}

} // namespace

std::map<std::string, std::string> parse_config_stream(std::istream& in) {
    std::map<std::string, std::string> values;
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: bad section header at line " +
                                  std::to_string(line_no));
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("config: empty section name at line " +
                                  std::to_string(line_no));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " +
                              std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: empty key at line " + std::to_string(line_no));
        values[section.empty() ? key : section + "." + key] = value;
    }
    return values;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse_config_stream(in);
}

void apply_config_values(RunConfig& config,
                         const std::map<std::string, std::string>& values) {
    // Custom material sections first so later setup keys may reference them.
    std::map<std::string, std::map<std::string, std::string>> material_sections;
    for (const auto& [key, value] : values) {
        if (key.rfind("material.", 0) != 0) continue;
        const auto rest = key.substr(9);
        const auto dot = rest.find('.');
        if (dot == std::string::npos)
            throw ConfigError("config: expected material.<name>.<key>, got '" + key + "'");
        material_sections[rest.substr(0, dot)][rest.substr(dot + 1)] = value;
    }
    for (const auto& [name, kv] : material_sections)
        config.custom_materials.insert_or_assign(name, material_from_config(name, kv));

    for (const auto& [key, value] : values) {
        if (key.rfind("material.", 0) == 0) continue;
        if (key == "run.command") config.command = value;
        else if (key == "run.out") config.out_path = value;
        else if (key == "setup.name") config.setup_name = value;
        else if (key == "setup.sphere") config.sphere = value;
        else if (key == "setup.overlayer") config.overlayer = value;
        else if (key == "setup.w_um") config.overlayer_w_um = to_double(key, value);
        else if (key == "setup.substrate_b") config.substrate_b = value;
        else if (key == "setup.substrate_c") config.substrate_c = value;
        else if (key == "setup.radius_um") config.radius_um = to_double(key, value);
        else if (key == "setup.temperature_k") config.temperature_k = to_double(key, value);
        else if (key == "grid.a_start_um") config.a_start_um = to_double(key, value);
        else if (key == "grid.a_stop_um") config.a_stop_um = to_double(key, value);
        else if (key == "grid.a_points") config.a_points = to_int(key, value);
        else if (key == "grid.a_scale") config.a_scale = to_scale(key, value);
        else if (key == "grid.xi_start_ev") config.xi_start_ev = to_double(key, value);
        else if (key == "grid.xi_stop_ev") config.xi_stop_ev = to_double(key, value);
        else if (key == "grid.xi_points") config.xi_points = to_int(key, value);
        else if (key == "grid.xi_scale") config.xi_scale = to_scale(key, value);
        else if (key == "model.prescription") config.prescription = value;
        else if (key == "model.mu") config.mu = value;
        else if (key == "model.material") config.material = value;
        else if (key == "model.table") config.table_path = value;
        else if (key == "model.mat1") config.mat1 = value;
        else if (key == "model.mat2") config.mat2 = value;
        else if (key == "quadrature.rel_tol") config.quadrature.rel_tol = to_double(key, value);
        else if (key == "quadrature.l_max_cap") config.quadrature.l_max_cap = to_int(key, value);
        else if (key == "quadrature.k_node_budget")
            config.quadrature.k_node_budget = to_int(key, value);
        else if (key == "quadrature.tail_factor")
            config.quadrature.tail_factor = to_double(key, value);
        else throw ConfigError("config: unknown key '" + key + "'");
    }
}

std::vector<Prescription> RunConfig::prescriptions() const {
    if (prescription == "drude") return {Prescription::drude};
    if (prescription == "plasma") return {Prescription::plasma};
    if (prescription == "both") return {Prescription::drude, Prescription::plasma};
    throw ConfigError("config: prescription must be drude, plasma or both, got '" +
                      prescription + "'");
}

std::vector<bool> RunConfig::mu_toggles() const {
    if (mu == "unity") return {false};
    if (mu == "full") return {true};
    if (mu == "both") return {false, true};
    throw ConfigError("config: mu must be unity, full or both, got '" + mu + "'");
}

const Material& RunConfig::resolve_material(const std::string& name) const {
    if (name.empty()) throw ConfigError("config: missing material name");
    if (const auto it = custom_materials.find(name); it != custom_materials.end())
        return it->second;
    try {
        return casimir::materials::preset(name);
    } catch (const std::invalid_argument&) {
        throw ConfigError("unknown material '" + name + "'");
    }
}

casimir::setups::IsoelectronicSetup RunConfig::resolve_setup() const {
    if (!setup_name.empty()) {
        try {
            return casimir::setups::preset(setup_name);
        } catch (const std::invalid_argument&) {
            throw ConfigError("unknown setup '" + setup_name + "'");
        }
    }
    if (overlayer.empty() || substrate_b.empty() || substrate_c.empty())
        throw ConfigError(
            "config: need --setup or an inline setup (overlayer, substrate_b, "
            "substrate_c, w_um)");
    if (!(overlayer_w_um > 0.0))
        throw ConfigError("config: inline setup needs w_um > 0");
    return {"inline",
            radius_um,
            resolve_material(sphere),
            resolve_material(overlayer),
            overlayer_w_um,
            resolve_material(substrate_b),
            resolve_material(substrate_c),
            temperature_k};
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved_entries() const {
    std::vector<std::pair<std::string, std::string>> entries;
    entries.emplace_back("run.command", command);
    if (!out_path.empty()) entries.emplace_back("run.out", out_path);
    if (command == "delta") {
        if (!setup_name.empty()) {
            entries.emplace_back("setup.name", setup_name);
        } else {
            entries.emplace_back("setup.overlayer", overlayer);
            entries.emplace_back("setup.sphere", sphere);
            entries.emplace_back("setup.substrate_b", substrate_b);
            entries.emplace_back("setup.substrate_c", substrate_c);
            entries.emplace_back("setup.w_um", format_value(overlayer_w_um));
        }
        entries.emplace_back("setup.radius_um", format_value(radius_um));
        entries.emplace_back("setup.temperature_k", format_value(temperature_k));
    }
    if (command == "eta") {
        entries.emplace_back("model.mat1", mat1);
        entries.emplace_back("model.mat2", mat2);
        entries.emplace_back("setup.temperature_k", format_value(temperature_k));
    }
    if (command == "eta" || command == "delta") {
        entries.emplace_back("grid.a_points", std::to_string(a_points));
        entries.emplace_back("grid.a_scale", scale_name(a_scale));
        entries.emplace_back("grid.a_start_um", format_value(a_start_um));
        entries.emplace_back("grid.a_stop_um", format_value(a_stop_um));
    }
    if (command == "delta") {
        entries.emplace_back("model.mu", mu);
        entries.emplace_back("model.prescription", prescription);
    }
    if (command == "permittivity") {
        entries.emplace_back("grid.xi_points", std::to_string(xi_points));
        entries.emplace_back("grid.xi_scale", scale_name(xi_scale));
        entries.emplace_back("grid.xi_start_ev", format_value(xi_start_ev));
        entries.emplace_back("grid.xi_stop_ev", format_value(xi_stop_ev));
        entries.emplace_back("model.material", material);
        if (!table_path.empty()) {
            entries.emplace_back("model.prescription", prescription);
            entries.emplace_back("model.table", table_path);
        }
    }
    entries.emplace_back("quadrature.k_node_budget",
                         std::to_string(quadrature.k_node_budget));
    entries.emplace_back("quadrature.l_max_cap", std::to_string(quadrature.l_max_cap));
    entries.emplace_back("quadrature.rel_tol", format_value(quadrature.rel_tol));
    entries.emplace_back("quadrature.tail_factor", format_value(quadrature.tail_factor));
    std::sort(entries.begin(), entries.end());
    return entries;
}

std::map<std::string, std::string> material_to_config(const Material& m) {
    using Kind = Material::Kind;
    std::map<std::string, std::string> kv;
    switch (m.kind()) {
        case Kind::metal:
            kv["kind"] = "metal";
            kv["plasma_ev"] = format_value(m.drude_parameters().plasma_ev);
            kv["relaxation_ev"] = format_value(m.drude_parameters().relaxation_ev);
            break;
        case Kind::dielectric:
            kv["kind"] = "dielectric";
            kv["eps_static"] = format_value(m.eps_static());
            kv["resonance_ev"] = format_value(m.resonance_ev());
            break;
        case Kind::conductive_dielectric:
            kv["kind"] = "conductive_dielectric";
            kv["eps_static"] = format_value(m.eps_static());
            kv["resonance_ev"] = format_value(m.resonance_ev());
            kv["plasma_ev"] = format_value(m.drude_parameters().plasma_ev);
            kv["relaxation_ev"] = format_value(m.drude_parameters().relaxation_ev);
            break;
        case Kind::tabulated_metal:
            throw ConfigError("material '" + m.name() +
                              "': tabulated data cannot be serialized to config");
    }
    if (!m.permeability().is_unity()) {
        kv["mu_static"] = format_value(m.permeability().static_value());
        kv["mu_relaxation_ev"] = format_value(m.permeability().relaxation_ev());
    }
    return kv;
}

Material material_from_config(const std::string& name,
                              const std::map<std::string, std::string>& kv) {
    auto get = [&](const char* key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw ConfigError("material '" + name + "': missing key '" + key + "'");
        return it->second;
    };
    auto get_double = [&](const char* key) { return to_double(key, get(key)); };

    PermeabilityModel mu = PermeabilityModel::unity();
    if (kv.count("mu_static")) {
        const double wm = kv.count("mu_relaxation_ev")
                              ? to_double("mu_relaxation_ev", kv.at("mu_relaxation_ev"))
                              : 1e-10;
        mu = PermeabilityModel::debye(get_double("mu_static"), wm);
    }

    const std::string& kind = get("kind");
    if (kind == "metal")
        return Material::metal(name, {get_double("plasma_ev"), get_double("relaxation_ev")},
                               mu);
    if (kind == "dielectric")
        return Material::dielectric(name, get_double("eps_static"),
                                    get_double("resonance_ev"));
    if (kind == "conductive_dielectric")
        return Material::conductive_dielectric(
            name, get_double("eps_static"), get_double("resonance_ev"),
            {get_double("plasma_ev"), get_double("relaxation_ev")});
    if (kind == "tabulated_metal") {
        std::ifstream in(get("table"));
        if (!in)
            throw ConfigError("material '" + name + "': cannot open table '" +
                              get("table") + "'");
        return Material::tabulated_metal(
            name, casimir::materials::ingest_optical_data(in),
            {get_double("plasma_ev"), get_double("relaxation_ev")}, mu);
    }
    throw ConfigError("material '" + name + "': unknown kind '" + kind + "'");
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace casimir_iso
