#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

// The CLI binary and config directory are provided by CTest through the
// environment; the suite skips these cases when run standalone.
const char* cli_path() { return std::getenv("OPTOMECH_CLI"); }
const char* config_dir() { return std::getenv("OPTOMECH_CONFIG_DIR"); }

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const std::string out_file = "cli_test_stdout.tmp";
  const std::string err_file = "cli_test_stderr.tmp";
  const std::string cmd =
      std::string(cli_path()) + " " + args + " >" + out_file + " 2>" + err_file;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ostringstream o, e;
  o << std::ifstream(out_file).rdbuf();
  e << std::ifstream(err_file).rdbuf();
  r.out = o.str();
  r.err = e.str();
  return r;
}

}  // namespace

TEST_CASE("cli: entangle on the shipped config succeeds with both criteria") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r =
      run_cli("entangle --config " + std::string(config_dir()) + "/fig2.json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("mirrors"));
  CHECK(j.contains("fields"));
  CHECK(j["mirrors"].contains("duan"));
  CHECK(j["mirrors"].contains("simon"));
  CHECK(j["fields"]["simon"]["nu_min"].get<double>() > 0.0);
}

TEST_CASE("cli: missing config file exits 2 and names the path") {
  if (!cli_path()) return;
  const RunResult r = run_cli("steady --config /no/such/file.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("/no/such/file.json") != std::string::npos);
}

TEST_CASE("cli: covariance on an unstable configuration exits 1 citing the eigenvalue") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r = run_cli("covariance --config " + std::string(config_dir()) +
                              "/fig2_caption_literal.json");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("max eigenvalue real part") != std::string::npos);
}

TEST_CASE("cli: stability verdict on the literal caption encoding") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r = run_cli("stability --config " + std::string(config_dir()) +
                              "/fig2_caption_literal.json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK_FALSE(j["stable"].get<bool>());
  CHECK(j["eigenvalues"].size() == 12);
}

TEST_CASE("cli: spectrum emits a CSV with the requested grid") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r = run_cli("spectrum --config " + std::string(config_dir()) +
                              "/fig4a.json --grid 33");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("omega_hz,s_out\n", 0) == 0);
  const long lines = std::count(r.out.begin(), r.out.end(), '\n');
  CHECK(lines == 34);  // header + 33 rows
}

TEST_CASE("cli: stability --matrix appends the drift and diffusion CSV") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r = run_cli("stability --config " + std::string(config_dir()) +
                              "/fig2.json --matrix");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# A (rad/s)") != std::string::npos);
  CHECK(r.out.find("# D (rad/s)") != std::string::npos);
  CHECK(r.out.find("dQ1,dP1,dQ2,dP2,dX1,dY1,dX2,dY2,dU1,dU2,dV1,dV2") !=
        std::string::npos);
}

TEST_CASE("cli: covariance emits the 12x12 CSV with named components") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r =
      run_cli("covariance --config " + std::string(config_dir()) + "/fig2.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("dQ1,dP1,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);  // header + 12 rows
}

TEST_CASE("cli: sweep runs the shipped spec and emits ordered CSV") {
  if (!cli_path() || !config_dir()) return;
  // Trim the shipped spec to a handful of points to keep the test quick.
  std::ostringstream spec;
  spec << std::ifstream(std::string(config_dir()) + "/sweep_fig2a.json").rdbuf();
  auto j = nlohmann::json::parse(spec.str());
  j["values"] = {0.85, 0.9, 0.95};
  const std::string path = "cli_test_spec.tmp.json";
  std::ofstream(path) << j.dump();
  const RunResult r = run_cli("sweep --spec " + path + " --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("axis_value,stable,duan_mirrors,simon_mirrors,", 0) == 0);
  CHECK(r.out.find("\n0.85,true,") != std::string::npos);
  CHECK(r.out.find("\n0.9,true,") != std::string::npos);
}

TEST_CASE("cli: manifest lists the run and its outputs") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r = run_cli("steady --config " + std::string(config_dir()) +
                              "/fig2.json --out cli_test_result.tmp.json "
                              "--manifest cli_test_manifest.tmp.json");
  CHECK(r.exit_code == 0);
  std::ostringstream m;
  m << std::ifstream("cli_test_manifest.tmp.json").rdbuf();
  const auto j = nlohmann::json::parse(m.str());
  CHECK(j["subcommand"] == "steady");
  CHECK(j["outputs"].size() == 1);
  CHECK(j["outputs"][0] == "cli_test_result.tmp.json");
  CHECK(j["resolved_parameters"].contains("gamma_m_hz"));
}

TEST_CASE("cli: steady subcommand prints complex amplitudes as [re, im]") {
  if (!cli_path() || !config_dir()) return;
  const RunResult r =
      run_cli("steady --config " + std::string(config_dir()) + "/fig2.json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["a_s"].is_array());
  REQUIRE(j["a_s"].size() == 2);
  CHECK(j["a_s"][0].size() == 2);
  CHECK(j["p_s"][0].get<double>() == 0.0);
  CHECK(j["residual"].get<double>() < 1e-10);
}
