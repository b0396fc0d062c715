#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SGAS_CLI_PATH
#error "SGAS_CLI_PATH must point at the sgas executable"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SGAS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("selberg subcommand prints 1/6") {
  const RunResult r = run("selberg --n 2 --lambda1 0 --lambda2 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# sgas") == 0);
  CHECK(r.out.find("seed=42") != std::string::npos);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].find("0.1666666666666666") != std::string::npos);
}

TEST_CASE("dm-asym carries its config and the formula value") {
  const RunResult r = run("--format json dm-asym --n 14 --x 0.2 --y 0.8");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["config"]["command"] == "dm-asym");
  CHECK(doc["config"]["n"] == 14);
  CHECK(doc["provenance"]["seed"] == 42);
  const double g4 = 1.3069;  // G(3/2)^4 to four places
  const double approx = 14.0 * g4 / std::sqrt(28.0) * std::pow(0.16 * 0.16, 0.125) / std::sqrt(0.6);
  CHECK(doc["results"][0]["asymptote"].get<double>() == doctest::Approx(approx).epsilon(1e-3));
}

TEST_CASE("table1 has ten rows in the expected band") {
  const RunResult r = run("table1 --n 14 --m-samples 5000 --seed 42");
  REQUIRE(r.exit_code == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 11);
  CHECK(lines[0].find("ratio") != std::string::npos);
  const auto doc = nlohmann::json::parse(run("--format json table1 --n 14 --m-samples 5000 --seed 42").out);
  REQUIRE(doc["results"].size() == 10);
  for (const auto& row : doc["results"]) {
    const double ratio = row["ratio"].get<double>();
    CHECK(ratio > 0.88);
    CHECK(ratio < 1.17);
  }
}

TEST_CASE("output is byte-identical across thread counts and runs") {
  const std::string args = "dm-mc --n 14 --x 0.3 --y 0.6 --m-samples 400 --seed 7";
  const RunResult a = run("--threads 1 " + args);
  const RunResult b = run("--threads 4 " + args);
  const RunResult c = run("--threads 1 " + args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const std::string env = "SELBERG_GAS_THREADS=3 " + std::string(SGAS_CLI_PATH) + " " + args + " > /dev/null";
  CHECK(std::system(env.c_str()) == 0);
}

TEST_CASE("JSON output round-trips") {
  for (const char* args : {"--format json selberg --n 3 --lambda1 0.5 --lambda2 0.5",
                           "--format json orbitals --j-max 4 --n 16",
                           "--format json fh-toeplitz --sizes 8 16 32 48 --a 0.5",
                           "--format json sample-jue --n 4 --count 3"}) {
    const RunResult r = run(args);
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    const std::string once = doc.dump(2);
    CHECK(nlohmann::ordered_json::parse(once).dump(2) == once);
    CHECK(doc.contains("config"));
    CHECK(doc.contains("results"));
    CHECK(doc["provenance"].contains("version"));
  }
}

TEST_CASE("--out writes the same document") {
  const auto path = std::filesystem::temp_directory_path() / "sgas_cli_out_test.csv";
  const RunResult r = run("--out " + path.string() + " morris --n 1 --a 2 --b 1");
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run("morris --n 1 --a 2 --b 1").out);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run("--bogus").exit_code == 2);
  CHECK(run("selberg --n 0").exit_code == 2);
  CHECK(run("dm-asym --n 14 --x 0.4 --y 0.4").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("validate --only 3").exit_code == 0);
  CHECK(run("validate --only 4").exit_code == 1);
}
