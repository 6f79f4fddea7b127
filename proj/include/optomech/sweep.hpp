#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "optomech/config.hpp"

namespace optomech {

// Per-point outputs a sweep can request. "stability" reports the max
// eigenvalue real part (rad/s); the boolean stable flag is always emitted.
enum class SweepOutput {
  duan_mirrors,
  duan_fields,
  simon_mirrors,
  simon_fields,
  s_out_min,
  stability,
};

const char* to_string(SweepOutput out);
SweepOutput sweep_output_from_string(const std::string& name);

struct SweepSpec {
  Config base;
  std::string axis;            // parameter path, e.g. "delta_cav_ratio", "g_hz"
  std::vector<double> values;  // non-empty
  std::vector<SweepOutput> outputs;
  int spectrum_points = 2048;          // grid for s_out_min
  double spectrum_omega_max_hz = 0.0;  // 0 -> 3 omega_m / 2pi
};

// Axis paths: delta_cav_ratio (Delta/omega_m, both modes), delta_cav_hz,
// g_hz, omega_m_hz, kappa_hz (paired fields set both modes), gamma_atom_hz,
// delta_atom_hz, inject_rate, drive_amp_hz, rho_aa, rho_cc, rho_ca.
Config apply_axis(const Config& base, const std::string& axis, double value);

struct SweepRow {
  double axis_value = 0.0;
  bool stable = false;
  // Aligned with SweepSpec::outputs; covariance-derived entries are absent
  // at unstable points.
  std::vector<std::optional<double>> outputs;
  std::string error;  // per-row failure, empty when the point solved cleanly

  bool operator==(const SweepRow&) const = default;
};

// Runs every axis value (parallel over points, rows in input order).
// Per-point failures land in SweepRow::error and never abort the sweep.
// threads <= 0 picks the hardware concurrency. Throws ConfigError on an
// invalid spec.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 0);

// Deterministic CSV: header "axis_value,stable,<outputs...>", one row per
// point, empty cells for absent outputs.
void emit_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
              std::ostream& os);

// JSON array of row objects; parse_sweep_rows inverts it exactly given the
// same requested-output list.
void emit_json(const SweepSpec& spec, const std::vector<SweepRow>& rows,
               std::ostream& os);
std::vector<SweepRow> parse_sweep_rows(const std::string& json_text,
                                       const std::vector<SweepOutput>& outputs);

// Spec JSON: {"base": {...config...}, "axis": "...", "values": [...],
//             "outputs": [...], "spectrum_points": n, "spectrum_omega_max_hz": x}
SweepSpec parse_sweep_spec(const std::string& json_text);
SweepSpec load_sweep_spec(const std::string& path);

}  // namespace optomech
