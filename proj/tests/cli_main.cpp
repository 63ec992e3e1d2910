// Exit-code and determinism contract of the command line tool, exercised
// against the real binary with the fixture files in data/.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(SPECTILE_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(SPECTILE_TEST_DATA_DIR) + "/" + name;
}

int failures = 0;

void expect(bool condition, const std::string& what) {
  if (condition) {
    std::cout << "  ok: " << what << "\n";
  } else {
    std::cout << "  FAILED: " << what << "\n";
    ++failures;
  }
}

}  // namespace

int main() {
  expect(run_cli("check --input " + fixture("z2.json")).exit_code == 0,
         "check accepts the integer lattice");
  expect(run_cli("check --input " + fixture("brick.json") + " --format json").exit_code == 0,
         "check accepts the shifted-column tiling");

  RunResult bad = run_cli("check --input " + fixture("bad_half.json") + " --format json");
  expect(bad.exit_code == 1, "check rejects the half-shifted set");
  expect(bad.output.find("\"witness\"") != std::string::npos, "negative verdict carries a witness");
  expect(bad.output.find("1/2\"") != std::string::npos, "witness delta is reported verbatim");

  RunResult first = run_cli("check --input " + fixture("brick.json") + " --format json");
  RunResult second = run_cli("check --input " + fixture("brick.json") + " --format json");
  expect(first.output == second.output, "json reports are byte identical across runs");

  expect(run_cli("construct --input " + fixture("form_dim2.json")).exit_code == 0,
         "construct builds and verifies a catalog form");

  RunResult rec = run_cli("recognize --input " + fixture("brick.json") + " --format json");
  expect(rec.exit_code == 0, "recognize matches the shifted-column tiling");
  expect(rec.output.find("\"dim2\"") != std::string::npos, "recognition reports the form kind");
  expect(run_cli("recognize --input " + fixture("bad_half.json")).exit_code == 1,
         "recognize refuses unverified sets");

  RunResult svg1 = run_cli("render --input " + fixture("brick.json") + " --window 1");
  RunResult svg2 = run_cli("render --input " + fixture("brick.json") + " --window 1");
  expect(svg1.exit_code == 0, "render succeeds on a plane tiling");
  expect(svg1.output.rfind("<svg", 0) == 0, "render emits svg");
  expect(svg1.output == svg2.output, "svg output is byte identical across runs");

  expect(run_cli("lca-check --input " + fixture("lca_z4.json")).exit_code == 0,
         "spectral measure pair verdict is positive");
  expect(run_cli("lca-check --input " + fixture("lca_tiling.json")).exit_code == 0,
         "tiling measure pair verdict is positive");
  expect(run_cli("lca-check --input " + fixture("lca_bad.json")).exit_code == 1,
         "broken measure pair verdict is negative");

  expect(run_cli("uncertainty --input " + fixture("uncertainty.json") + " --seed 7").exit_code == 0,
         "uncertainty trials hold");

  expect(run_cli("check --input " + fixture("malformed.json")).exit_code == 2,
         "malformed input is an input error");
  expect(run_cli("check --input " + fixture("does_not_exist.json")).exit_code == 2,
         "missing file is an input error");
  expect(run_cli("check --input " + fixture("budget.json") + " --work-cap 10000").exit_code == 3,
         "tight work cap is reported as budget exhaustion");
  expect(run_cli("nonsense").exit_code == 2, "unknown subcommands are input errors");

  if (failures == 0) {
    std::cout << "cli contract: all checks passed\n";
    return 0;
  }
  std::cout << "cli contract: " << failures << " checks FAILED\n";
  return 1;
}
