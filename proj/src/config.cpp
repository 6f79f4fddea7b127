#include "optomech/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "optomech/constants.hpp"
#include "optomech/errors.hpp"

namespace optomech {

namespace {

using nlohmann::json;

// Accepts a scalar (applied to both modes) or an array of two.
std::array<double, 2> pair_field(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (v.is_number()) {
    const double x = v.get<double>();
    return {x, x};
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(key + ": expected a number or an array of two numbers");
}

double number_field(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(key + ": expected a number");
  return v.get<double>();
}

void require_exactly_one(const json& j, const std::string& a, const std::string& b) {
  const bool ha = j.contains(a), hb = j.contains(b);
  if (ha == hb) {
    throw ConfigError("config must contain exactly one of '" + a + "' and '" + b + "'");
  }
}

json pair_json(const std::array<double, 2>& v) { return json::array({v[0], v[1]}); }

}  // namespace

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  static const std::set<std::string> known = {
      "cavity_length_m", "mirror_mass_kg", "wavelength_m", "omega_cav_hz",
      "omega_m_hz", "quality_factor", "gamma_m_hz", "kappa_hz", "g_hz",
      "gamma_atom_hz", "delta_atom_hz", "delta_cav_ratio", "delta_cav_hz",
      "drive_power_w", "drive_amp_hz", "inject_rate", "rho0", "temperature_k",
      "n_mech", "n_field", "paper_faithful_occupancy"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  Config c;
  c.cavity_length_m = number_field(j, "cavity_length_m");
  c.mirror_mass_kg = number_field(j, "mirror_mass_kg");

  require_exactly_one(j, "wavelength_m", "omega_cav_hz");
  double wavelength = 0.0;
  if (j.contains("wavelength_m")) {
    wavelength = number_field(j, "wavelength_m");
    if (wavelength <= 0.0) throw ConfigError("wavelength_m: must be positive");
    const double f = k_light_speed / wavelength;
    c.omega_cav_hz = {f, f};
  } else {
    c.omega_cav_hz = pair_field(j, "omega_cav_hz");
  }

  c.omega_m_hz = pair_field(j, "omega_m_hz");

  require_exactly_one(j, "quality_factor", "gamma_m_hz");
  if (j.contains("quality_factor")) {
    const double qf = number_field(j, "quality_factor");
    if (qf <= 0.0) throw ConfigError("quality_factor: must be positive");
    c.gamma_m_hz = {c.omega_m_hz[0] / qf, c.omega_m_hz[1] / qf};
  } else {
    c.gamma_m_hz = pair_field(j, "gamma_m_hz");
  }

  c.kappa_hz = pair_field(j, "kappa_hz");
  c.g_hz = pair_field(j, "g_hz");
  c.gamma_atom_hz = number_field(j, "gamma_atom_hz");
  c.delta_atom_hz = pair_field(j, "delta_atom_hz");

  require_exactly_one(j, "delta_cav_ratio", "delta_cav_hz");
  if (j.contains("delta_cav_ratio")) {
    const double r = number_field(j, "delta_cav_ratio");
    c.delta_cav_hz = {r * c.omega_m_hz[0], r * c.omega_m_hz[1]};
  } else {
    c.delta_cav_hz = pair_field(j, "delta_cav_hz");
  }

  require_exactly_one(j, "drive_power_w", "drive_amp_hz");
  if (j.contains("drive_power_w")) {
    const double power = number_field(j, "drive_power_w");
    if (power < 0.0) throw ConfigError("drive_power_w: negative power rejected");
    for (int m = 0; m < 2; ++m) {
      const double wl = k_light_speed / c.omega_cav_hz[m];
      c.drive_amp_hz[m] =
          drive_amplitude_from_power(power, wl, k_two_pi * c.kappa_hz[m]) / k_two_pi;
    }
  } else {
    c.drive_amp_hz = pair_field(j, "drive_amp_hz");
  }

  c.inject_rate = number_field(j, "inject_rate");

  if (!j.contains("rho0") || !j.at("rho0").is_object()) {
    throw ConfigError("rho0: expected an object with rho_aa, rho_cc, rho_ca");
  }
  {
    const json& r = j.at("rho0");
    for (const auto& [key, value] : r.items()) {
      if (key != "rho_aa" && key != "rho_cc" && key != "rho_ca") {
        throw ConfigError("unknown config key 'rho0." + key + "'");
      }
    }
    c.rho0.rho_aa = number_field(r, "rho_aa");
    c.rho0.rho_cc = number_field(r, "rho_cc");
    c.rho0.rho_ca = number_field(r, "rho_ca");
  }

  c.paper_faithful_occupancy =
      j.contains("paper_faithful_occupancy") && j.at("paper_faithful_occupancy").get<bool>();

  // Occupancies: explicit overrides win, otherwise thermal at temperature_k.
  const bool has_t = j.contains("temperature_k");
  if (j.contains("n_field")) {
    c.n_field = number_field(j, "n_field");
  } else if (has_t) {
    c.n_field = thermal_occupancy(number_field(j, "temperature_k"),
                                  k_two_pi * c.omega_cav_hz[0]);
  } else {
    throw ConfigError("config must contain 'temperature_k' or explicit occupancies");
  }
  if (j.contains("n_mech")) {
    c.n_mech = pair_field(j, "n_mech");
  } else if (has_t) {
    const double t = number_field(j, "temperature_k");
    c.n_mech = {thermal_occupancy(t, k_two_pi * c.omega_m_hz[0]),
                thermal_occupancy(t, k_two_pi * c.omega_m_hz[1])};
  } else {
    throw ConfigError("config must contain 'temperature_k' or explicit occupancies");
  }
  if (c.paper_faithful_occupancy) {
    c.n_mech = {c.n_field, c.n_field};
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const Config& c) {
  json j;
  j["cavity_length_m"] = c.cavity_length_m;
  j["mirror_mass_kg"] = c.mirror_mass_kg;
  j["omega_cav_hz"] = pair_json(c.omega_cav_hz);
  j["omega_m_hz"] = pair_json(c.omega_m_hz);
  j["gamma_m_hz"] = pair_json(c.gamma_m_hz);
  j["kappa_hz"] = pair_json(c.kappa_hz);
  j["g_hz"] = pair_json(c.g_hz);
  j["gamma_atom_hz"] = c.gamma_atom_hz;
  j["delta_atom_hz"] = pair_json(c.delta_atom_hz);
  j["delta_cav_hz"] = pair_json(c.delta_cav_hz);
  j["drive_amp_hz"] = pair_json(c.drive_amp_hz);
  j["inject_rate"] = c.inject_rate;
  j["rho0"] = {{"rho_aa", c.rho0.rho_aa},
               {"rho_cc", c.rho0.rho_cc},
               {"rho_ca", c.rho0.rho_ca}};
  j["n_mech"] = pair_json(c.n_mech);
  j["n_field"] = c.n_field;
  j["paper_faithful_occupancy"] = c.paper_faithful_occupancy;
  return j.dump(2);
}

SystemParams build_params(const Config& c) {
  SystemParams p;
  p.cavity_len = c.cavity_length_m;
  p.mirror_mass = c.mirror_mass_kg;
  for (int m = 0; m < 2; ++m) {
    p.omega_cav[m] = k_two_pi * c.omega_cav_hz[m];
    p.omega_m[m] = k_two_pi * c.omega_m_hz[m];
    p.gamma_m[m] = k_two_pi * c.gamma_m_hz[m];
    p.kappa[m] = k_two_pi * c.kappa_hz[m];
    p.g[m] = k_two_pi * c.g_hz[m];
    p.delta[m] = k_two_pi * c.delta_atom_hz[m];
    p.delta_cav[m] = k_two_pi * c.delta_cav_hz[m];
    p.drive_amp[m] = k_two_pi * c.drive_amp_hz[m];
    p.n_mech[m] = c.n_mech[m];
  }
  p.gamma_atom = k_two_pi * c.gamma_atom_hz;
  p.inject_rate = c.inject_rate;
  p.rho0 = c.rho0;
  p.n_field = c.n_field;
  validate_or_throw(p);
  return p;
}

}  // namespace optomech
