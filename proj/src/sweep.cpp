#include "optomech/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "optomech/constants.hpp"
#include "optomech/covariance.hpp"
#include "optomech/entanglement.hpp"
#include "optomech/errors.hpp"
#include "optomech/spectra.hpp"
#include "optomech/steady_state.hpp"

namespace optomech {

namespace {

using nlohmann::json;

// Deterministic shortest-round-trip formatting for doubles.
std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  double back = 0.0;
  std::sscanf(buf, "%lg", &back);
  if (back == x) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[32];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
      std::sscanf(shorter, "%lg", &back);
      if (back == x) return shorter;
    }
  }
  return buf;
}

}  // namespace

const char* to_string(SweepOutput out) {
  switch (out) {
    case SweepOutput::duan_mirrors: return "duan_mirrors";
    case SweepOutput::duan_fields: return "duan_fields";
    case SweepOutput::simon_mirrors: return "simon_mirrors";
    case SweepOutput::simon_fields: return "simon_fields";
    case SweepOutput::s_out_min: return "s_out_min";
    case SweepOutput::stability: return "stability";
  }
  return "?";
}

SweepOutput sweep_output_from_string(const std::string& name) {
  for (SweepOutput o : {SweepOutput::duan_mirrors, SweepOutput::duan_fields,
                        SweepOutput::simon_mirrors, SweepOutput::simon_fields,
                        SweepOutput::s_out_min, SweepOutput::stability}) {
    if (name == to_string(o)) return o;
  }
  throw ConfigError("unknown sweep output '" + name + "'");
}

Config apply_axis(const Config& base, const std::string& axis, double value) {
  Config c = base;
  if (axis == "delta_cav_ratio") {
    c.delta_cav_hz = {value * c.omega_m_hz[0], value * c.omega_m_hz[1]};
  } else if (axis == "delta_cav_hz") {
    c.delta_cav_hz = {value, value};
  } else if (axis == "g_hz") {
    c.g_hz = {value, value};
  } else if (axis == "omega_m_hz") {
    // Keep the quality factor and the detuning ratio of the base config.
    const double qf = base.omega_m_hz[0] / base.gamma_m_hz[0];
    const double ratio = base.delta_cav_hz[0] / base.omega_m_hz[0];
    c.omega_m_hz = {value, value};
    c.gamma_m_hz = {value / qf, value / qf};
    c.delta_cav_hz = {ratio * value, ratio * value};
  } else if (axis == "kappa_hz") {
    c.kappa_hz = {value, value};
  } else if (axis == "gamma_atom_hz") {
    c.gamma_atom_hz = value;
  } else if (axis == "delta_atom_hz") {
    c.delta_atom_hz = {value, value};
  } else if (axis == "inject_rate") {
    c.inject_rate = value;
  } else if (axis == "drive_amp_hz") {
    c.drive_amp_hz = {value, value};
  } else if (axis == "rho_aa") {
    c.rho0.rho_aa = value;
  } else if (axis == "rho_cc") {
    c.rho0.rho_cc = value;
  } else if (axis == "rho_ca") {
    c.rho0.rho_ca = value;
  } else {
    throw ConfigError("sweep axis '" + axis + "' does not name a parameter path");
  }
  return c;
}

namespace {

SweepRow solve_row(const SweepSpec& spec, double value) {
  SweepRow row;
  row.axis_value = value;
  row.outputs.assign(spec.outputs.size(), std::nullopt);
  try {
    const Config cfg = apply_axis(spec.base, spec.axis, value);
    const SystemParams params = build_params(cfg);
    const SteadyState steady = solve_steady_state(params);
    const LinearModel model = build_linear_model(params, steady);
    const StabilityReport rep = stability(model.a_mat);
    row.stable = rep.stable;

    for (std::size_t i = 0; i < spec.outputs.size(); ++i) {
      if (spec.outputs[i] == SweepOutput::stability) {
        row.outputs[i] = rep.max_real_part;
      }
    }
    if (!rep.stable) return row;

    const bool needs_cov = std::any_of(
        spec.outputs.begin(), spec.outputs.end(), [](SweepOutput o) {
          return o == SweepOutput::duan_mirrors || o == SweepOutput::duan_fields ||
                 o == SweepOutput::simon_mirrors || o == SweepOutput::simon_fields;
        });
    CovarianceMatrix cm;
    if (needs_cov) cm = solve_lyapunov(model.a_mat, model.d_mat);

    for (std::size_t i = 0; i < spec.outputs.size(); ++i) {
      switch (spec.outputs[i]) {
        case SweepOutput::duan_mirrors:
          row.outputs[i] = duan_sum(reduce_two_mode(cm, Subsystem::mirrors)).total;
          break;
        case SweepOutput::duan_fields:
          row.outputs[i] = duan_sum(reduce_two_mode(cm, Subsystem::fields)).total;
          break;
        case SweepOutput::simon_mirrors:
          row.outputs[i] = simon_criterion(reduce_two_mode(cm, Subsystem::mirrors)).nu_min;
          break;
        case SweepOutput::simon_fields:
          row.outputs[i] = simon_criterion(reduce_two_mode(cm, Subsystem::fields)).nu_min;
          break;
        case SweepOutput::s_out_min: {
          const double omega_max =
              spec.spectrum_omega_max_hz > 0.0
                  ? k_two_pi * spec.spectrum_omega_max_hz
                  : 3.0 * k_two_pi * cfg.omega_m_hz[0];
          const auto series = squeezing_spectrum(
              model, symmetric_grid(omega_max, spec.spectrum_points));
          row.outputs[i] =
              *std::min_element(series.s_out.begin(), series.s_out.end());
          break;
        }
        case SweepOutput::stability:
          break;  // already filled
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    row.stable = false;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
  if (spec.values.empty()) {
    throw ConfigError("sweep spec: values list must be non-empty");
  }
  (void)apply_axis(spec.base, spec.axis, spec.values.front());  // axis check

  const std::size_t n = spec.values.size();
  std::vector<SweepRow> rows(n);
  unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, n));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      rows[i] = solve_row(spec, spec.values[i]);
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

void emit_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
              std::ostream& os) {
  os << "axis_value,stable";
  for (SweepOutput o : spec.outputs) os << ',' << to_string(o);
  os << '\n';
  for (const SweepRow& row : rows) {
    os << fmt_double(row.axis_value) << ',' << (row.stable ? "true" : "false");
    for (const auto& v : row.outputs) {
      os << ',';
      if (v) os << fmt_double(*v);
    }
    os << '\n';
  }
}

void emit_json(const SweepSpec& spec, const std::vector<SweepRow>& rows,
               std::ostream& os) {
  json arr = json::array();
  for (const SweepRow& row : rows) {
    json r;
    r["axis_value"] = row.axis_value;
    r["stable"] = row.stable;
    json outs = json::object();
    for (std::size_t i = 0; i < spec.outputs.size(); ++i) {
      if (row.outputs[i]) {
        outs[to_string(spec.outputs[i])] = *row.outputs[i];
      } else {
        outs[to_string(spec.outputs[i])] = nullptr;
      }
    }
    r["outputs"] = outs;
    if (!row.error.empty()) r["error"] = row.error;
    arr.push_back(r);
  }
  os << arr.dump(2) << '\n';
}

std::vector<SweepRow> parse_sweep_rows(const std::string& json_text,
                                       const std::vector<SweepOutput>& outputs) {
  json arr;
  try {
    arr = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sweep rows: invalid JSON: ") + e.what());
  }
  if (!arr.is_array()) throw ConfigError("sweep rows: expected a JSON array");
  std::vector<SweepRow> rows;
  rows.reserve(arr.size());
  for (const json& r : arr) {
    SweepRow row;
    row.axis_value = r.at("axis_value").get<double>();
    row.stable = r.at("stable").get<bool>();
    if (r.contains("outputs")) {
      const json& outs = r.at("outputs");
      for (SweepOutput o : outputs) {
        const json& v = outs.at(to_string(o));
        if (v.is_null()) {
          row.outputs.emplace_back(std::nullopt);
        } else {
          row.outputs.emplace_back(v.get<double>());
        }
      }
    }
    if (r.contains("error")) row.error = r.at("error").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sweep spec: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("sweep spec: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "base" && key != "axis" && key != "values" && key != "outputs" &&
        key != "spectrum_points" && key != "spectrum_omega_max_hz") {
      throw ConfigError("sweep spec: unknown key '" + key + "'");
    }
  }
  for (const char* key : {"base", "axis", "values", "outputs"}) {
    if (!j.contains(key)) {
      throw ConfigError(std::string("sweep spec: missing required key '") + key + "'");
    }
  }
  SweepSpec spec;
  spec.base = parse_config(j.at("base").dump());
  spec.axis = j.at("axis").get<std::string>();
  if (!j.at("values").is_array() || j.at("values").empty()) {
    throw ConfigError("sweep spec: values list must be non-empty");
  }
  for (const json& v : j.at("values")) spec.values.push_back(v.get<double>());
  for (const json& o : j.at("outputs")) {
    spec.outputs.push_back(sweep_output_from_string(o.get<std::string>()));
  }
  if (j.contains("spectrum_points")) spec.spectrum_points = j.at("spectrum_points").get<int>();
  if (j.contains("spectrum_omega_max_hz")) {
    spec.spectrum_omega_max_hz = j.at("spectrum_omega_max_hz").get<double>();
  }
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read sweep spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep_spec(buf.str());
}

}  // namespace optomech
