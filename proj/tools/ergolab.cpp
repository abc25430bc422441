// ergolab: config-driven scenario runner.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 config/parse error,
// 3 ergodicity hypothesis failure (report embedded in stderr JSON).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "ergolab/scenario.hpp"

using nlohmann::json;

namespace {

// nlohmann reports a byte offset; turn it into line/column for the contract
std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json verdict_str(ergolab::Verdict v) {
  using ergolab::Verdict;
  if (v == Verdict::RationallyIndependent) return "rationally-independent";
  if (v == Verdict::Dependent) return "dependent";
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical ergodic theory laboratory"};
  app.require_subcommand(1);

  std::string output_dir = "out";
  int threads = 0;
  long long seed_override = -1;
  app.add_option("--output-dir", output_dir, "artifact directory");
  app.add_option("--threads", threads, "worker count (0 = library default)");
  app.add_option("--seed", seed_override,
                 "override the sampler seed in the config");

  std::string config_path;
  auto* run = app.add_subcommand("run", "execute one scenario config");
  run->add_option("config", config_path, "config file (JSON, schema_version 1)")
      ->required();

  bool as_json = false;
  auto* list = app.add_subcommand("list-scenarios", "print the catalog");
  list->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  if (list->parsed()) {
    json cat = ergolab::scenario_catalog();
    if (as_json) {
      std::cout << cat.dump(2) << "\n";
    } else {
      for (const auto& e : cat) {
        std::cout << e["scenario"].get<std::string>() << "  ["
                  << e["anchor"].get<std::string>() << "]\n    "
                  << e["about"].get<std::string>() << "\n    hypotheses: "
                  << e["hypotheses"].get<std::string>() << "\n    keys:";
        for (const auto& k : e["required_keys"])
          std::cout << " " << k.get<std::string>();
        std::cout << "\n";
      }
    }
    return 0;
  }

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << config_path << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  json cfg;
  try {
    cfg = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
    std::cerr << "parse error at line " << line << ", column " << col << ": "
              << e.what() << "\n";
    return 2;
  }

  if (seed_override >= 0) {
    cfg["seed"] = seed_override;
    if (cfg.contains("system") && cfg["system"].contains("sampler"))
      cfg["system"]["sampler"]["seed"] = seed_override;
  }

  try {
    ergolab::RunReport rep = ergolab::run_scenario(cfg, output_dir);
    for (const auto& c : rep.checks)
      std::printf("%-4s %s  measured=%.17g threshold=%.17g\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                  c.threshold);
    if (!rep.verdict.empty()) std::printf("verdict: %s\n", rep.verdict.c_str());
    std::printf("report: %s/%s_report.json (%.2fs)\n", output_dir.c_str(),
                rep.scenario.c_str(), rep.wall_time_s);
    return rep.all_pass() ? 0 : 1;
  } catch (const ergolab::HypothesisFailure& e) {
    json entries = json::array();
    for (const auto& h : e.report.entries)
      entries.push_back({{"hypothesis_name", h.name},
                         {"symbolic_verdict", verdict_str(h.verdict)},
                         {"empirical_weyl_sum", h.weyl_sum},
                         {"flagged", h.flagged}});
    std::cerr << json{{"error", e.code}, {"message", e.what()},
                      {"ergodicity_report", entries}}
                     .dump(2)
              << "\n";
    return 3;
  } catch (const ergolab::Error& e) {
    std::cerr << "error [" << e.code << "]: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
