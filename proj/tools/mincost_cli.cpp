// Command-line scenario runner for the minimum-cost measurement toolkit.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mincost/costs.hpp"
#include "mincost/linalg.hpp"
#include "mincost/scenario.hpp"
#include "mincost/sequences.hpp"
#include "mincost/types.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string format = "json";
};

void emit(const json& report, const GlobalOptions& opts) {
  std::string text;
  if (opts.format == "text") {
    std::string name = report.value("name", std::string("report"));
    text = name + "\n";
    if (report.contains("values")) {
      for (auto it = report["values"].begin(); it != report["values"].end(); ++it) {
        text += "  " + it.key() + " = " + it.value().dump() + "\n";
      }
    }
    if (report.contains("expectations")) {
      for (const auto& e : report["expectations"]) {
        text += std::string(e["pass"].get<bool>() ? "  [ok]   " : "  [FAIL] ") +
                e["name"].get<std::string>() + " expected " + e["expected"].dump() + "\n";
      }
    }
  } else {
    text = report.dump(2) + "\n";
  }
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out);
    f << text;
  }
}

int run_one(const std::string& path, const GlobalOptions& opts,
            const std::optional<std::string>& forced_kind) {
  mincost::RunOptions run_opts;
  run_opts.seed = opts.seed;
  run_opts.certification_tol = opts.tol;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  json scenario;
  try {
    scenario = json::parse(in);
  } catch (const json::parse_error& e) {
    std::cerr << "invalid JSON in " << path << ": " << e.what() << "\n";
    return 2;
  }
  if (forced_kind) scenario["kind"] = *forced_kind;
  const json report = mincost::run_scenario(scenario, run_opts);
  emit(report, opts);
  return mincost::all_expectations_pass(report) ? 0 : 1;
}

int list_scenarios(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    std::cerr << "no scenario directory at " << dir << "\n";
    return 2;
  }
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().string());
  }
  std::sort(names.begin(), names.end());
  for (const auto& n : names) std::cout << n << "\n";
  return 0;
}

json pbr_demo_report() {
  using namespace mincost;
  ComplexVector zero(2), plus(2);
  zero << 1, 0;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  std::vector<PureState> letters{zero, plus};
  std::vector<PureState> products;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) products.push_back(kron(letters[a], letters[b]));
  }
  Ensemble ensemble = Ensemble::uniform_pure(products);
  SequenceEnsemble seq(Ensemble::uniform_pure(letters), 2);
  const CostMatrix global =
      build_global_cost(seq, GlobalCostFunction::step(2.0, min_error_cost(2)));
  const Povm basis = pbr_basis();
  json report;
  report["name"] = "pbr-demo";
  report["kind"] = "pbr_demo";
  json& values = report["values"];
  values["pbr_cost"] = average_cost(ensemble, global, basis);
  const auto elim = elimination_check(basis, ensemble.states);
  json table = json::array();
  for (const auto& row : elim) {
    json r = json::array();
    for (bool cell : row) r.push_back(cell);
    table.push_back(std::move(r));
  }
  report["elimination"] = table;
  json states = json::array();
  for (const auto& e : basis.elements) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
      json rw = json::array();
      for (Eigen::Index c = 0; c < e.cols(); ++c) {
        rw.push_back(json::array({e(r, c).real(), e(r, c).imag()}));
      }
      rows.push_back(std::move(rw));
    }
    states.push_back(std::move(rows));
  }
  report["basis_projectors"] = states;
  return report;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cost quantum measurement toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--out", opts.out, "write the report to a file instead of stdout");
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "override the oracle seed");
  double tol_value = 0;
  auto* tol_opt = app.add_option("--tol", tol_value, "override the certification tolerance");
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> run_files;
  auto* run_cmd = app.add_subcommand("run", "run scenario files");
  run_cmd->add_option("files", run_files, "scenario JSON files")->required();

  std::string bound_file;
  auto* bound_cmd = app.add_subcommand("bound", "run a bounding-pipeline scenario");
  bound_cmd->add_option("file", bound_file, "scenario JSON file")->required();

  std::string seq_file;
  auto* seq_cmd = app.add_subcommand("sequence", "run a sequence scenario");
  seq_cmd->add_option("file", seq_file, "scenario JSON file")->required();

  std::string oracle_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "run the numerical solver on a scenario");
  oracle_cmd->add_option("file", oracle_file, "scenario JSON file")->required();

  auto* pbr_cmd = app.add_subcommand("pbr-demo", "evaluate the state-elimination basis");

  std::string scenario_dir = "scenarios";
  auto* list_cmd = app.add_subcommand("list-scenarios", "list bundled scenario files");
  list_cmd->add_option("--dir", scenario_dir, "scenario directory");

  CLI11_PARSE(app, argc, argv);

  if (*seed_opt) {
    opts.seed = seed_value;
  } else if (const char* env = std::getenv("MINCOST_SEED")) {
    opts.seed = std::strtoull(env, nullptr, 10);
  }
  if (*tol_opt) opts.tol = tol_value;

  try {
    if (*run_cmd) {
      int worst = 0;
      for (const auto& f : run_files) worst = std::max(worst, run_one(f, opts, std::nullopt));
      return worst;
    }
    if (*bound_cmd) return run_one(bound_file, opts, std::string("bound"));
    if (*seq_cmd) return run_one(seq_file, opts, std::string("sequence"));
    if (*oracle_cmd) return run_one(oracle_file, opts, std::string("oracle"));
    if (*pbr_cmd) {
      emit(pbr_demo_report(), opts);
      return 0;
    }
    if (*list_cmd) return list_scenarios(scenario_dir);
  } catch (const mincost::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mincost::NoConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << " (best cost " << e.best_cost << ")\n";
    return 4;
  } catch (const mincost::Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
