#include "optomech/params.hpp"

#include <cmath>
#include <sstream>

#include "optomech/constants.hpp"
#include "optomech/errors.hpp"

namespace optomech {

double radiation_pressure_coupling(const SystemParams& params, int j) {
  return params.omega_cav[j] / params.cavity_len *
         std::sqrt(k_hbar / (params.mirror_mass * params.omega_m[j]));
}

double drive_amplitude_from_power(double power_w, double wavelength_m, double kappa) {
  if (power_w < 0.0) {
    throw ConfigError("drive_power_w: negative power rejected");
  }
  const double omega_l = k_two_pi * k_light_speed / wavelength_m;
  return std::sqrt(2.0 * kappa * power_w / (k_hbar * omega_l));
}

double thermal_occupancy(double temperature_k, double omega) {
  if (temperature_k <= 0.0) {
    throw ConfigError("temperature_k: must be positive");
  }
  if (omega <= 0.0) {
    throw ConfigError("thermal_occupancy: frequency must be positive");
  }
  // 1/expm1 handles both the Rayleigh-Jeans and the deep quantum limit.
  return 1.0 / std::expm1(k_hbar * omega / (k_boltzmann * temperature_k));
}

std::vector<std::string> validate(const SystemParams& p) {
  std::vector<std::string> errs;
  auto require = [&errs](bool ok, const char* msg) {
    if (!ok) errs.emplace_back(msg);
  };

  require(p.cavity_len > 0.0, "cavity_len: must be strictly positive");
  require(p.mirror_mass > 0.0, "mirror_mass: must be strictly positive");
  for (int j = 0; j < 2; ++j) {
    require(p.omega_cav[j] > 0.0, "omega_cav: must be strictly positive");
    require(p.omega_m[j] > 0.0, "omega_m: must be strictly positive");
    require(p.gamma_m[j] > 0.0, "gamma_m: must be strictly positive");
    require(p.kappa[j] > 0.0, "kappa: must be strictly positive");
    require(p.g[j] >= 0.0, "g: must be nonnegative");
    require(std::isfinite(p.delta[j]), "delta: must be finite");
    require(std::isfinite(p.delta_cav[j]), "delta_cav: must be finite");
    require(p.n_mech[j] >= 0.0, "n_mech: occupancy must be nonnegative");
  }
  require(p.gamma_atom > 0.0, "gamma_atom: must be strictly positive");
  require(p.inject_rate >= 0.0, "inject_rate: must be nonnegative");
  require(p.n_field >= 0.0, "n_field: occupancy must be nonnegative");

  const AtomicInjection& r = p.rho0;
  require(r.rho_aa >= 0.0 && r.rho_aa <= 1.0, "rho0.rho_aa: must lie in [0,1]");
  require(r.rho_cc >= 0.0 && r.rho_cc <= 1.0, "rho0.rho_cc: must lie in [0,1]");
  if (std::abs(r.rho_aa + r.rho_cc - 1.0) > 1e-12) {
    errs.emplace_back("rho0: rho_aa + rho_cc must equal 1 (level b unpopulated)");
  }
  if (r.rho_ca * r.rho_ca > r.rho_aa * r.rho_cc + 1e-12) {
    std::ostringstream os;
    os << "rho0.rho_ca: positivity violated, rho_ca^2 = " << r.rho_ca * r.rho_ca
       << " exceeds rho_aa*rho_cc = " << r.rho_aa * r.rho_cc;
    errs.push_back(os.str());
  }
  return errs;
}

void validate_or_throw(const SystemParams& params) {
  const auto errs = validate(params);
  if (errs.empty()) return;
  std::ostringstream os;
  os << "invalid parameters:";
  for (const auto& e : errs) os << "\n  - " << e;
  throw ConfigError(os.str());
}

}  // namespace optomech
