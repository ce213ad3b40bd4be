// End-to-end checks of the detgeo binary: exit codes, output determinism,
// and the analyze/optimize surfaces.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DETGEO_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli analyze by name") {
  const auto swap = run_cli("analyze --name swap");
  CHECK(swap.exit_code == 0);
  CHECK(swap.output.find("perfect entangler: no") != std::string::npos);
  CHECK(swap.output.find("0.65") != std::string::npos);

  const auto si = run_cli("--format json analyze --name sqrt_iswap");
  CHECK(si.exit_code == 0);
  CHECK(si.output.find("\"perfect_entangler\": true") != std::string::npos);
  CHECK(si.output.find("1.0857864376269") != std::string::npos);
}

TEST_CASE("cli analyze by weyl triple, radians and degrees") {
  const auto rad = run_cli("analyze --weyl 0,0,0");
  CHECK(rad.exit_code == 0);
  CHECK(rad.output.find("cnot witness:      local") != std::string::npos);

  const auto deg = run_cli("--format json analyze --weyl 90,0,0 --degrees");
  CHECK(deg.exit_code == 0);
  CHECK(deg.output.find("\"exact_cnot_count\": 1") != std::string::npos);
}

TEST_CASE("cli input errors exit with code 2") {
  CHECK(run_cli("analyze --name nonsuch").exit_code == 2);
  CHECK(run_cli("analyze --weyl 0,1,0").exit_code == 2);
  CHECK(run_cli("analyze").exit_code == 2);
  CHECK(run_cli("analyze --name swap --weyl 0,0,0").exit_code == 2);
  CHECK(run_cli("curves --family bogus").exit_code == 2);
  CHECK(run_cli("optimize --p 0.5").exit_code == 2);
}

TEST_CASE("cli rejects a grossly non-unitary matrix with code 3") {
  const std::string path = "/tmp/detgeo_bad_matrix.json";
  {
    std::ofstream f(path);
    f << R"({"matrix": [[[2,0],[0,0],[0,0],[0,0]],
                        [[0,0],[1,0],[0,0],[0,0]],
                        [[0,0],[0,0],[1,0],[0,0]],
                        [[0,0],[0,0],[0,0],[1,0]]]})";
  }
  CHECK(run_cli("analyze --input " + path).exit_code == 3);
  std::remove(path.c_str());
}

TEST_CASE("cli matrix input matches the catalog entry") {
  const std::string path = "/tmp/detgeo_cnot.json";
  {
    std::ofstream f(path);
    f << R"({"matrix": [[[1,0],[0,0],[0,0],[0,0]],
                        [[0,0],[1,0],[0,0],[0,0]],
                        [[0,0],[0,0],[0,0],[1,0]],
                        [[0,0],[0,0],[1,0],[0,0]]]})";
  }
  const auto from_matrix = run_cli("--format json analyze --input " + path);
  const auto from_name = run_cli("--format json analyze --name cnot");
  CHECK(from_matrix.exit_code == 0);
  // Nonlocal data agrees; spot-check the headline coordinate.
  CHECK(from_matrix.output.find("\"d1sq\": 2.0") != std::string::npos);
  CHECK(from_name.output.find("\"d1sq\": 2.0") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli csv streams are byte-identical across runs") {
  for (const std::string args :
       {std::string("scan --resolution 8"),
        std::string("curves --family diagonal --p 1,2,inf --resolution 16"),
        std::string("regions --resolution 16")}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
  }
}

TEST_CASE("cli optimize reports the Theorem-independent constants") {
  const auto p2 = run_cli("--format json optimize --p 2 --resolution 16 --seed 1");
  CHECK(p2.exit_code == 0);
  CHECK(p2.output.find("\"degenerate_minimizers\": false") != std::string::npos);

  const auto pinf = run_cli("--format json optimize --p inf --resolution 16 --seed 1");
  CHECK(pinf.exit_code == 0);
  CHECK(pinf.output.find("\"degenerate_minimizers\": true") != std::string::npos);
}

TEST_CASE("cli catalog lists all gates") {
  const auto r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  for (const char* name :
       {"identity", "cnot", "cz", "iswap", "sqrt_iswap", "swap", "sqrt_swap"})
    CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("cli --out writes the same bytes as stdout") {
  const std::string path = "/tmp/detgeo_regions_out.csv";
  const auto direct = run_cli("regions --resolution 8");
  const auto filed = run_cli("--out " + path + " regions --resolution 8");
  CHECK(filed.exit_code == 0);
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == direct.output);
  std::remove(path.c_str());
}
