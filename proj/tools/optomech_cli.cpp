#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "optomech/config.hpp"
#include "optomech/constants.hpp"
#include "optomech/covariance.hpp"
#include "optomech/dynamics.hpp"
#include "optomech/entanglement.hpp"
#include "optomech/errors.hpp"
#include "optomech/spectra.hpp"
#include "optomech/steady_state.hpp"
#include "optomech/sweep.hpp"

namespace {

using nlohmann::json;
using namespace optomech;

constexpr const char* kVersion = "0.1.0";

json complex_pair(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

struct OutputSink {
  std::string path;  // empty -> stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write output file '" + path + "'");
    out << text;
  }
};

void write_manifest(const std::string& manifest_path, const std::string& subcommand,
                    const std::string& config_path, const Config& cfg,
                    const std::vector<std::string>& output_paths) {
  if (manifest_path.empty()) return;
  json m;
  m["subcommand"] = subcommand;
  m["config"] = config_path;
  m["resolved_parameters"] = json::parse(serialize_config(cfg));
  m["artifact_version"] = kVersion;
  m["outputs"] = output_paths;
  std::ofstream out(manifest_path);
  if (!out) throw ConfigError("cannot write manifest '" + manifest_path + "'");
  out << m.dump(2) << '\n';
}

struct Pipeline {
  Config cfg;
  SystemParams params;
  SteadyState steady;
  LinearModel model;
  StabilityReport report;
};

Pipeline run_pipeline(const std::string& config_path) {
  Pipeline p;
  p.cfg = load_config(config_path);
  p.params = build_params(p.cfg);
  p.steady = solve_steady_state(p.params);
  p.model = build_linear_model(p.params, p.steady);
  p.report = stability(p.model.a_mat);
  return p;
}

json steady_json(const SteadyState& st) {
  json j;
  j["a_s"] = json::array({complex_pair(st.a_s[0]), complex_pair(st.a_s[1])});
  j["q_s"] = json::array({st.q_s[0], st.q_s[1]});
  j["p_s"] = json::array({st.p_s[0], st.p_s[1]});
  j["delta_eff"] = json::array({st.delta_eff[0], st.delta_eff[1]});
  j["x_s"] = json::array({st.x_s[0], st.x_s[1]});
  j["y_s"] = json::array({st.y_s[0], st.y_s[1]});
  j["residual"] = st.residual;
  j["iterations"] = st.iterations;
  j["damped"] = st.damped;
  return j;
}

std::string matrix_csv(const Eigen::MatrixXd& m, bool header) {
  std::ostringstream os;
  if (header) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << kFluctuationNames[static_cast<std::size_t>(c)];
    }
    os << '\n';
  }
  char buf[40];
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

json entangle_json(const CovarianceMatrix& cm) {
  json j;
  for (Subsystem sub : {Subsystem::mirrors, Subsystem::fields}) {
    const TwoModeCM two = reduce_two_mode(cm, sub);
    const DuanResult duan = duan_sum(two);
    const SimonResult simon = simon_criterion(two);
    json s;
    s["duan"] = {{"total", duan.total}, {"entangled", duan.entangled}};
    s["simon"] = {{"nu_min", simon.nu_min},
                  {"nu_max", simon.nu_max},
                  {"entangled", simon.entangled},
                  {"log_negativity", logarithmic_negativity(simon.nu_min)}};
    j[sub == Subsystem::mirrors ? "mirrors" : "fields"] = s;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode optomechanical cavity with injected cascade atoms: "
               "steady states, stability, stationary covariances, CV "
               "entanglement criteria and output squeezing spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path, out_path, manifest_path, spec_path, format = "csv";
  int grid_n = 2048;
  double omega_max_hz = 0.0;
  bool dump_matrix = false;
  int threads = 0;

  auto add_common = [&](CLI::App* sub, bool needs_config = true) {
    if (needs_config) {
      sub->add_option("--config", config_path, "JSON configuration file")->required();
    }
    sub->add_option("--out", out_path, "output file (default: standard output)");
    sub->add_option("--manifest", manifest_path, "write a run manifest (JSON)");
  };

  CLI::App* cmd_steady = app.add_subcommand("steady", "solve the steady state");
  add_common(cmd_steady);
  CLI::App* cmd_stab = app.add_subcommand("stability", "drift-matrix eigenvalues and verdict");
  add_common(cmd_stab);
  cmd_stab->add_flag("--matrix", dump_matrix, "also dump A and D as CSV");
  CLI::App* cmd_cov = app.add_subcommand("covariance", "stationary covariance matrix (CSV)");
  add_common(cmd_cov);
  CLI::App* cmd_ent = app.add_subcommand("entangle", "Duan and Simon criteria for both pairs");
  add_common(cmd_ent);
  CLI::App* cmd_spec = app.add_subcommand("spectrum", "output squeezing spectrum (CSV)");
  add_common(cmd_spec);
  cmd_spec->add_option("--grid", grid_n, "number of grid points")->check(CLI::PositiveNumber);
  cmd_spec->add_option("--omega-max", omega_max_hz,
                       "max analysis frequency as omega/2pi in Hz (default 3 omega_m)");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "run a parameter sweep");
  cmd_sweep->add_option("--spec", spec_path, "sweep spec JSON file")->required();
  cmd_sweep->add_option("--out", out_path, "output file (default: standard output)");
  cmd_sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_sweep->add_option("--threads", threads, "worker threads (default: hardware)");
  cmd_sweep->add_option("--manifest", manifest_path, "write a run manifest (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  OutputSink sink{out_path};
  std::vector<std::string> outputs;
  if (!out_path.empty()) outputs.push_back(out_path);

  try {
    if (cmd_steady->parsed()) {
      Pipeline p;
      p.cfg = load_config(config_path);
      p.params = build_params(p.cfg);
      p.steady = solve_steady_state(p.params);
      sink.write(steady_json(p.steady).dump(2));
      write_manifest(manifest_path, "steady", config_path, p.cfg, outputs);
    } else if (cmd_stab->parsed()) {
      const Pipeline p = run_pipeline(config_path);
      json j;
      json eigs = json::array();
      for (int i = 0; i < 12; ++i) eigs.push_back(complex_pair(p.report.eigenvalues(i)));
      j["eigenvalues"] = eigs;
      j["max_real_part"] = p.report.max_real_part;
      j["stable"] = p.report.stable;
      std::string text = j.dump(2);
      if (dump_matrix) {
        text += "\n# A (rad/s)\n" + matrix_csv(p.model.a_mat, true);
        text += "# D (rad/s)\n" + matrix_csv(p.model.d_mat, true);
      }
      sink.write(text);
      write_manifest(manifest_path, "stability", config_path, p.cfg, outputs);
    } else if (cmd_cov->parsed()) {
      const Pipeline p = run_pipeline(config_path);
      const CovarianceMatrix cm = solve_lyapunov(p.model.a_mat, p.model.d_mat);
      sink.write(matrix_csv(cm.v, true));
      write_manifest(manifest_path, "covariance", config_path, p.cfg, outputs);
    } else if (cmd_ent->parsed()) {
      const Pipeline p = run_pipeline(config_path);
      const CovarianceMatrix cm = solve_lyapunov(p.model.a_mat, p.model.d_mat);
      sink.write(entangle_json(cm).dump(2));
      write_manifest(manifest_path, "entangle", config_path, p.cfg, outputs);
    } else if (cmd_spec->parsed()) {
      const Pipeline p = run_pipeline(config_path);
      if (!p.report.stable) {
        throw UnstableSystem("spectrum: model is unstable, max eigenvalue real part " +
                                 std::to_string(p.report.max_real_part) + " rad/s",
                             p.report.max_real_part);
      }
      const double omega_max = omega_max_hz > 0.0 ? k_two_pi * omega_max_hz
                                                  : 3.0 * p.params.omega_m[0];
      const SpectrumSeries series =
          squeezing_spectrum(p.model, symmetric_grid(omega_max, grid_n));
      std::ostringstream os;
      os << "omega_hz,s_out\n";
      char buf[40];
      for (std::size_t i = 0; i < series.omega_grid.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", series.omega_grid[i] / k_two_pi);
        os << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", series.s_out[i]);
        os << buf << '\n';
      }
      sink.write(os.str());
      write_manifest(manifest_path, "spectrum", config_path, p.cfg, outputs);
    } else if (cmd_sweep->parsed()) {
      const SweepSpec spec = load_sweep_spec(spec_path);
      const auto rows = run_sweep(spec, threads);
      std::ostringstream os;
      if (format == "csv") {
        emit_csv(spec, rows, os);
      } else {
        emit_json(spec, rows, os);
      }
      sink.write(os.str());
      write_manifest(manifest_path, "sweep", spec_path, spec.base, outputs);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
