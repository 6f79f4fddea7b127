#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace optomech {

// Injected atomic state rho0 = rho_aa |a><a| + rho_cc |c><c| + rho_ca (|c><a| + |a><c|).
// Level |b> carries no population at injection; rho_ca is real.
struct AtomicInjection {
  double rho_aa = 0.5;
  double rho_cc = 0.5;
  double rho_ca = 0.5;

  bool operator==(const AtomicInjection&) const = default;
};

// Physical parameters of the hybrid system, all rates in angular units (rad/s).
// Mode index j = 0,1 labels the two cavity modes / mirrors.
struct SystemParams {
  double cavity_len = 0.0;   // m
  double mirror_mass = 0.0;  // kg
  std::array<double, 2> omega_cav{};   // cavity frequencies
  std::array<double, 2> omega_m{};     // mechanical frequencies
  std::array<double, 2> gamma_m{};     // mechanical damping
  std::array<double, 2> kappa{};       // cavity decay
  std::array<double, 2> g{};           // atom-field couplings
  double gamma_atom = 0.0;             // atomic polarization decay
  std::array<double, 2> delta{};       // atomic detunings delta_j
  std::array<double, 2> delta_cav{};   // drive-cavity detunings delta_j - Delta_j
  std::array<std::complex<double>, 2> drive_amp{};  // drive amplitudes eps_j
  double inject_rate = 0.0;            // atomic injection rate r_a (1/s)
  AtomicInjection rho0;
  std::array<double, 2> n_mech{};      // thermal phonon occupancy per mirror bath
  double n_field = 0.0;                // thermal photon occupancy N of the field baths
};

// Radiation-pressure coupling chi_j = (omega_j / L) sqrt(hbar / (m omega_mj)).
double radiation_pressure_coupling(const SystemParams& params, int j);

// eps = sqrt(2 kappa P / (hbar omega_L)) with omega_L = 2 pi c / wavelength.
double drive_amplitude_from_power(double power_w, double wavelength_m, double kappa);

// Bose occupancy 1 / (exp(hbar omega / kB T) - 1).
double thermal_occupancy(double temperature_k, double omega);

// Returns one message per violated invariant, empty when params are valid.
std::vector<std::string> validate(const SystemParams& params);

// Throws ConfigError listing all violations.
void validate_or_throw(const SystemParams& params);

}  // namespace optomech
