#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trialg/cli/config.hpp"
#include "trialg/cli/fixtures_catalog.hpp"
#include "trialg/cli/runner.hpp"

namespace {

constexpr int kUsageError = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kUsageError;
  }
  return 0;
}

int run_and_emit(const trialg::RunConfig& config, const std::string& out_path) {
  const trialg::RunResult result = trialg::run(config);
  const int written = emit(trialg::render_report(result.report), out_path);
  return written != 0 ? written : result.exit_code;
}

trialg::json field_json(const std::string& field) {
  if (field == "rational" || field == "Q") return "rational";
  try {
    std::size_t used = 0;
    const long long p = std::stoll(field, &used);
    if (used == field.size()) return {{"prime", p}};
  } catch (const std::exception&) {
  }
  throw trialg::ConfigError("--field", "expected \"rational\" or a prime, got '" + field + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on triangular algebras"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;
  auto* run_cmd = app.add_subcommand("run", "Run the tasks of a JSON config");
  run_cmd->add_option("--config", config_path, "Config file")->required();
  run_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  run_cmd->add_option("--seed", seed, "Override the config seed");

  std::optional<std::string> fixture;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List the built-in fixtures");
  fixtures_cmd->add_option("--name", fixture, "Only this fixture");

  std::string family = "Tn", kind = "derivation", field = "rational", sigma = "identity";
  std::size_t n = 2, split = 1;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one space of maps on a family");
  solve_cmd->add_option("--family", family, "Tn, poly_triangular, full_matrix or trunc_poly");
  solve_cmd->add_option("--n", n, "Size parameter (N for the polynomial families)");
  solve_cmd->add_option("--split", split, "Block split for Tn");
  solve_cmd->add_option("--kind", kind, "Map kind, e.g. derivation or skew_commuting");
  solve_cmd->add_option("--field", field, "rational or an odd prime");
  solve_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*run_cmd) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return kUsageError;
      }
      trialg::json j;
      try {
        j = trialg::json::parse(in);
      } catch (const trialg::json::parse_error& e) {
        std::cerr << "error: " << config_path << ": " << e.what() << "\n";
        return kUsageError;
      }
      trialg::RunConfig config = trialg::parse_config(j);
      if (seed) config.seed = *seed;
      return run_and_emit(config, out_path);
    }
    if (*fixtures_cmd) {
      return emit(trialg::list_fixtures(fixture).dump(2) + "\n", "");
    }
    trialg::json algebra = {{"family", family}};
    if (family == "Tn" || family == "T_n") {
      algebra["n"] = n;
      algebra["split"] = split;
    } else if (family == "full_matrix") {
      algebra["n"] = n;
    } else {
      algebra["N"] = n;
    }
    const trialg::json j = {{"schema_version", trialg::kSchemaVersion},
                            {"field", field_json(field)},
                            {"algebra", algebra},
                            {"sigma", sigma},
                            {"tasks", {"solve:" + kind}}};
    return run_and_emit(trialg::parse_config(j), out_path);
  } catch (const trialg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const trialg::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
