#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipbound/selfcheck.hpp"
#include "lipbound/tensor_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LIPBOUND_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

double field_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  REQUIRE(pos != std::string::npos);
  return std::stod(text.substr(pos + key.size()));
}

// strip the trailing (timing) column from every CSV line
std::string drop_last_column(const std::string& csv) {
  std::string out;
  for (const auto& line : lines_of(csv)) {
    const auto comma = line.rfind(',');
    out += line.substr(0, comma);
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("cli bound: certified factor is visible and correct") {
  const RunResult r = run_cli("bound --kernel random:0:1x1x3 --samples 10 --certified");
  REQUIRE(r.exit_code == 0);
  const double bound = field_after(r.out, "bound: ");
  const double raw = field_after(r.out, "raw_grid_bound: ");
  const double factor = field_after(r.out, "factor: ");
  CHECK(factor == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(bound == doctest::Approx(1.25 * raw).epsilon(1e-12));
  CHECK(field_after(r.out, "alpha: ") == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("cli bound: file-backed kernel and json output") {
  const auto path = std::filesystem::temp_directory_path() / "cli_kernel.json";
  {
    std::ofstream os(path);
    os << R"({"cout":1,"cin":1,"s":3,"data":[0,0,0,0,1,0,0,0,0]})";
  }
  const RunResult r = run_cli("bound --kernel " + path.string() + " --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["per_out_channel"].size() == 1);
}

TEST_CASE("cli exact: identity kernel") {
  const auto path = std::filesystem::temp_directory_path() / "cli_identity.json";
  {
    std::ofstream os(path);
    os << R"({"cout":1,"cin":1,"s":3,"data":[0,0,0,0,1,0,0,0,0]})";
  }
  const RunResult r = run_cli("exact --kernel " + path.string() + " --n 6");
  REQUIRE(r.exit_code == 0);
  CHECK(field_after(r.out, "sigma1: ") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cli gap: csv schema and non-increasing gamma") {
  const RunResult r = run_cli("gap --kernel random:7:1x1x3 --n 4,8,12 --samples 50");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "n,lipbound,sigma1,gamma");
  std::vector<double> gammas;
  for (int i = 1; i < 4; ++i) {
    std::stringstream ss(lines[i]);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 4);
    gammas.push_back(std::stod(cells[3]));
  }
  CHECK(gammas[1] <= gammas[0] + 1e-6);
  CHECK(gammas[2] <= gammas[1] + 1e-6);
}

TEST_CASE("cli gap: byte-identical output across runs") {
  const std::string args = "gap --kernel random:3:2x2x3 --n 4,8 --samples 20";
  const RunResult r1 = run_cli(args);
  const RunResult r2 = run_cli(args);
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("cli compare: deterministic columns are byte-identical across runs") {
  const std::string args = "compare --kernel random:*:1x1x3 --n 8 --repeats 3 --samples 10";
  const RunResult r1 = run_cli(args);
  const RunResult r2 = run_cli(args);
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  CHECK(drop_last_column(r1.out) == drop_last_column(r2.out));
  const auto lines = lines_of(r1.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "method,value,ratio_to_exact,time_ms");
  CHECK(lines[1].starts_with("lipbound,"));
  CHECK(lines[2].starts_with("power_method,"));
  CHECK(lines[3].starts_with("sedghi,"));
  CHECK(lines[4].starts_with("frobenius,"));
}

TEST_CASE("cli compare: benchmark protocol at n=32 lands in the expected ratio band") {
  const RunResult r =
      run_cli("compare --kernel random:*:1x1x3 --n 32 --repeats 20 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j[0]["method"] == "lipbound");
  const double ratio = j[0]["ratio_to_exact"].get<double>();
  CHECK(ratio >= 0.95);
  CHECK(ratio <= 1.02);
}

TEST_CASE("cli compare: json mirrors the csv rows") {
  const RunResult r =
      run_cli("compare --kernel random:*:1x1x3 --n 8 --repeats 2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  CHECK(j[0]["method"] == "lipbound");
  CHECK(j[0]["ratio_to_exact"].get<double>() > 0.5);
}

TEST_CASE("cli bench: one row per shape") {
  const RunResult r =
      run_cli("bench --kernel random:*:1x1x3 --kernel random:*:2x2x3 --n 8 --repeats 3");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "shape,lipbound_ms,pm_ms,speedup");
  CHECK(lines[1].starts_with("1x1x3,"));
  CHECK(lines[2].starts_with("2x2x3,"));
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("frobnicate").exit_code == 2);                         // unknown subcommand
  CHECK(run_cli("bound").exit_code == 2);                              // missing --kernel
  CHECK(run_cli("bound --kernel random:oops:1x1x3").exit_code == 2);   // bad seed
  CHECK(run_cli("bound --kernel random:0:1x1").exit_code == 2);        // bad shape
  CHECK(run_cli("compare --kernel /tmp/nope.raw --n 8 --repeats 2").exit_code == 2);
  // computation errors surface as exit 1
  CHECK(run_cli("exact --kernel random:0:1x1x3 --n 400 --method dense").exit_code == 1);
  CHECK(run_cli("bound --kernel /definitely/missing.json").exit_code == 1);
  CHECK(run_cli("bound --kernel random:0:1x1x3 --samples 2 --certified").exit_code == 1);
}

TEST_CASE("cli check passes and library selfchecks agree") {
  const RunResult r = run_cli("check --seed 42");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  // the same suite through the library API
  for (const auto& c : lipbound::run_selfchecks(42)) CHECK(c.failures == 0);
}
