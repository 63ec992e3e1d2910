// Command-line front end: JSON in, verdicts with machine-readable witnesses
// out. Exit codes: 0 positive verdict / suite pass, 1 negative verdict,
// 2 input error, 3 work budget exceeded.

#include "spectile/errors.hpp"
#include "spectile/json_io.hpp"
#include "spectile/lca.hpp"
#include "spectile/lowdim.hpp"
#include "spectile/oracle.hpp"
#include "spectile/periodic.hpp"
#include "spectile/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using nlohmann::json;
using namespace spectile;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string input_path;
  std::uint64_t seed = 0;
  std::uint64_t work_cap = kDefaultWorkCap;
  std::string format = "text";
  int window = 2;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json rational_vec_json(const RatVec& v) {
  json out = json::array();
  for (const auto& q : v.entries()) out.push_back(format_rational(q));
  return out;
}

json witness_json(const PackingWitness& witness) {
  json k = json::array();
  for (const auto& c : witness.k) k.push_back(c.str());
  return json{{"delta", rational_vec_json(witness.delta)},
              {"k", std::move(k)},
              {"vector", rational_vec_json(witness.vector)}};
}

json verdict_json(const PairVerdict& verdict) {
  json out{{"status", to_string(verdict.status)}, {"density", format_rational(verdict.density)}};
  if (verdict.witness) out["witness"] = witness_json(*verdict.witness);
  if (verdict.non_integer_density) out["non_integer_density"] = true;
  return out;
}

void emit(const RunConfig& config, const json& report, const std::string& text_line) {
  if (config.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text_line << "\n";
  }
}

int run_check(const RunConfig& config) {
  PeriodicSet ps = parse_periodic_set(read_input(config.input_path));
  PairVerdict verdict = classify_pair(ps, PackingOptions{config.work_cap});

  json report{{"command", "check"}, {"classification", verdict_json(verdict)}};
  std::string oracle_note;
  bool agree = true;
  try {
    TilingCheckResult oracle = rasterized_tiling_check(ps, config.work_cap);
    agree = oracle.tiles == (verdict.status == PairStatus::SpectralAndTiling);
    report["oracle"] = json{{"tiles", oracle.tiles},
                            {"q", oracle.grid.q},
                            {"group_order", oracle.grid.group_order},
                            {"agree", agree}};
    if (oracle.grid.group_order <= 512) {
      report["oracle"]["multiplicity"] = json::parse(multiplicity_histogram_json(oracle.grid));
    }
    oracle_note = oracle.tiles ? "oracle tiles" : "oracle does not tile";
  } catch (const BudgetExceededError&) {
    report["oracle"] = json{{"skipped", "cell budget"}};
    oracle_note = "oracle skipped (budget)";
  }

  std::ostringstream line;
  line << to_string(verdict.status) << ", density " << format_rational(verdict.density) << ", "
       << oracle_note;
  emit(config, report, line.str());
  if (!agree) return kExitNegative;
  return verdict.status == PairStatus::SpectralAndTiling ? kExitPositive : kExitNegative;
}

int run_construct(const RunConfig& config) {
  ConstructRequest request = parse_construct_request(read_input(config.input_path));
  PeriodicSet ps = build_construct(request);
  PairVerdict verdict = classify_pair(ps, PackingOptions{config.work_cap});
  json report{{"command", "construct"},
              {"set", json::parse(periodic_set_to_json(ps))},
              {"classification", verdict_json(verdict)}};
  std::ostringstream line;
  line << "built " << ps.offsets().size() << " offsets in dimension " << ps.dim() << ", "
       << to_string(verdict.status);
  emit(config, report, line.str());
  return verdict.status == PairStatus::SpectralAndTiling ? kExitPositive : kExitNegative;
}

int run_recognize(const RunConfig& config) {
  PeriodicSet ps = parse_periodic_set(read_input(config.input_path));
  Recognition rec;
  try {
    rec = recognize(ps, PackingOptions{config.work_cap});
  } catch (const NotSpectralError& e) {
    json report{{"command", "recognize"}, {"recognized", false}, {"reason", e.what()}};
    emit(config, report, std::string("not recognizable: ") + e.what());
    return kExitNegative;
  }
  json report = json::parse(recognition_to_json(rec));
  report["command"] = "recognize";
  std::ostringstream line;
  switch (rec.kind) {
    case Recognition::Kind::Dim1: line << "dim-1 form"; break;
    case Recognition::Kind::Dim2:
      line << "dim-2 form (" << to_string(rec.dim2->orientation) << ", period " << rec.dim2->period() << ")";
      break;
    case Recognition::Kind::Dim3: line << "dim-3 form (period " << rec.dim3->period << ")"; break;
    case Recognition::Kind::NotCatalogForm: line << "no catalog form (internal error)"; break;
  }
  emit(config, report, line.str());
  return rec.kind != Recognition::Kind::NotCatalogForm ? kExitPositive : kExitNegative;
}

int run_render(const RunConfig& config) {
  PeriodicSet ps = parse_periodic_set(read_input(config.input_path));
  std::cout << emit_tiling_svg(ps, config.window);
  return kExitPositive;
}

int run_lca_check(const RunConfig& config) {
  MeasurePairInput input = parse_measure_pair(read_input(config.input_path));
  bool spectral = is_spectral_pair_measures(input.mu, input.nu);
  bool tiling = is_tiling_pair_measures(input.mu, input.nu);
  json report{{"command", "lca-check"},
              {"relation", input.relation},
              {"spectral", spectral},
              {"tiling", tiling}};
  std::ostringstream line;
  line << "spectral: " << (spectral ? "yes" : "no") << ", tiling: " << (tiling ? "yes" : "no");
  emit(config, report, line.str());
  bool positive = input.relation == "spectral" ? spectral
                  : input.relation == "tiling" ? tiling
                                               : spectral && tiling;
  return positive ? kExitPositive : kExitNegative;
}

int run_uncertainty(const RunConfig& config) {
  UncertaintyInput input = parse_uncertainty_input(read_input(config.input_path));
  const auto& g = input.mu.group();

  auto report_json = [](const UncertaintyReport& r) {
    return json{{"epsilon", r.epsilon}, {"delta", r.delta},   {"lhs", r.lhs},
                {"rhs", r.rhs},         {"holds", r.holds}};
  };

  if (input.f) {
    std::vector<std::int64_t> a_set = input.A.value_or(std::vector<std::int64_t>{});
    std::vector<std::int64_t> b_set = input.B.value_or(std::vector<std::int64_t>{});
    UncertaintyReport report = uncertainty_report(input.mu, input.nu, *input.f, a_set, b_set);
    json j{{"command", "uncertainty"}, {"report", report_json(report)}};
    std::ostringstream line;
    line << "lhs " << report.lhs << " <= rhs " << report.rhs << ": " << (report.holds ? "holds" : "violated");
    emit(config, j, line.str());
    return report.holds ? kExitPositive : kExitNegative;
  }

  const std::uint64_t trials = input.trials == 0 ? 100 : input.trials;
  std::uint64_t held = 0;
  double worst_gap = 0.0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(config.seed + i);
    std::vector<Cplx> f(static_cast<std::size_t>(g.order()));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    bool nonzero = false;
    for (std::int64_t x : input.mu.support()) {
      f[static_cast<std::size_t>(x)] = Cplx(unit(rng), unit(rng));
      if (std::abs(f[static_cast<std::size_t>(x)]) > 0) nonzero = true;
    }
    if (!nonzero) f[static_cast<std::size_t>(input.mu.support().front())] = 1.0;
    std::vector<std::int64_t> a_set, b_set;
    for (std::int64_t x = 0; x < g.order(); ++x) {
      if (rng() & 1u) a_set.push_back(x);
      if (rng() & 1u) b_set.push_back(x);
    }
    UncertaintyReport report = uncertainty_report(input.mu, input.nu, f, a_set, b_set);
    if (report.holds) ++held;
    worst_gap = std::max(worst_gap, report.lhs - report.rhs);
  }
  json j{{"command", "uncertainty"},
         {"trials", trials},
         {"held", held},
         {"worst_gap", worst_gap}};
  std::ostringstream line;
  line << held << "/" << trials << " trials hold";
  emit(config, j, line.str());
  return held == trials ? kExitPositive : kExitNegative;
}

int run_suite(const RunConfig& config) {
  std::vector<CriterionResult> results = run_acceptance_suite(SuiteOptions{config.seed, config.work_cap});
  if (config.format == "json") {
    json j = json::array();
    for (const auto& r : results) {
      j.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    std::cout << json{{"command", "suite"}, {"criteria", j}, {"passed", all_passed(results)}}.dump(2)
              << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail << ")\n";
    }
  }
  return all_passed(results) ? kExitPositive : kExitNegative;
}

void add_common_options(CLI::App* cmd, RunConfig& config, bool needs_input) {
  auto* input = cmd->add_option("--input", config.input_path, "input JSON file");
  if (needs_input) input->required();
  cmd->add_option("--seed", config.seed, "seed for randomized batteries");
  cmd->add_option("--work-cap", config.work_cap, "work budget for exact enumeration")
      ->check(CLI::Range(static_cast<std::uint64_t>(10'000), std::numeric_limits<std::uint64_t>::max()));
  cmd->add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"text", "json", "svg"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and construction toolkit for cube spectra and tilings"};
  app.require_subcommand(1);

  RunConfig config;
  int (*handler)(const RunConfig&) = nullptr;

  auto* check = app.add_subcommand("check", "classify a periodic set and cross-check the tiling oracle");
  add_common_options(check, config, true);
  check->callback([&]() { handler = run_check; });

  auto* construct = app.add_subcommand("construct", "build a periodic set from a catalog form");
  add_common_options(construct, config, true);
  construct->callback([&]() { handler = run_construct; });

  auto* recognize_cmd = app.add_subcommand("recognize", "match a verified set against the catalogs");
  add_common_options(recognize_cmd, config, true);
  recognize_cmd->callback([&]() { handler = run_recognize; });

  auto* render = app.add_subcommand("render", "emit an SVG picture of a two-dimensional tiling");
  add_common_options(render, config, true);
  render->add_option("--window", config.window, "lattice window radius")->check(CLI::Range(0, 64));
  render->callback([&]() { handler = run_render; });

  auto* lca = app.add_subcommand("lca-check", "decide spectral/tiling relations for a measure pair");
  add_common_options(lca, config, true);
  lca->callback([&]() { handler = run_lca_check; });

  auto* uncertainty = app.add_subcommand("uncertainty", "concentration bound reports for a spectral pair");
  add_common_options(uncertainty, config, true);
  uncertainty->callback([&]() { handler = run_uncertainty; });

  auto* suite = app.add_subcommand("suite", "run the full acceptance battery");
  add_common_options(suite, config, false);
  suite->callback([&]() { handler = run_suite; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    return handler(config);
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
