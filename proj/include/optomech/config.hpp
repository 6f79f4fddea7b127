#pragma once

#include <array>
#include <string>

#include "optomech/params.hpp"

namespace optomech {

// Canonical configuration, ordinary frequencies in Hz, SI elsewhere.
// Parsing accepts convenience forms (wavelength_m, quality_factor,
// drive_power_w, delta_cav_ratio, temperature_k); canonicalization resolves
// them so that serialize() always emits the explicit fields below.
struct Config {
  double cavity_length_m = 0.0;
  double mirror_mass_kg = 0.0;
  std::array<double, 2> omega_cav_hz{};
  std::array<double, 2> omega_m_hz{};
  std::array<double, 2> gamma_m_hz{};
  std::array<double, 2> kappa_hz{};
  std::array<double, 2> g_hz{};
  double gamma_atom_hz = 0.0;
  std::array<double, 2> delta_atom_hz{};
  std::array<double, 2> delta_cav_hz{};
  std::array<double, 2> drive_amp_hz{};
  double inject_rate = 0.0;
  AtomicInjection rho0;
  std::array<double, 2> n_mech{};
  double n_field = 0.0;
  bool paper_faithful_occupancy = false;

  bool operator==(const Config&) const = default;
};

// Parses a JSON object (text) into canonical form. Unknown keys are rejected;
// every complaint names the offending field. Throws ConfigError.
Config parse_config(const std::string& json_text);

// Reads and parses a config file. Throws ConfigError naming the path when
// the file cannot be read.
Config load_config(const std::string& path);

// Canonical JSON, stable field order, doubles round-trip exactly.
std::string serialize_config(const Config& cfg);

// Converts Hz fields to angular units and validates. Throws ConfigError.
SystemParams build_params(const Config& cfg);

}  // namespace optomech
