#ifndef ERGOLAB_SCENARIO_HPP
#define ERGOLAB_SCENARIO_HPP

#include <json.hpp>

#include "ergolab/seminorm.hpp"

namespace ergolab {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct RunReport {
  std::string scenario;
  std::string config_hash;
  std::vector<CheckResult> checks;
  std::string verdict;  // free-form scenario commentary
  double wall_time_s = 0.0;
  std::string library_version = kLibraryVersion;
  bool all_pass() const;
};

/// Thrown when a scenario that needs the ergodicity hypotheses finds them
/// violated; maps to exit status 3.
struct HypothesisFailure : Error {
  ErgodicityReport report;
  HypothesisFailure(ErgodicityReport rep)
      : Error("hypothesis-failure", "system fails the ergodicity hypotheses"),
        report(std::move(rep)) {}
};

/// FNV-1a over the canonically ordered serialization; stable under key
/// reordering of the config file.
std::string config_hash(const nlohmann::json& config);

/// Execute one scenario: validates, computes, writes
/// <outdir>/<scenario>_series.csv and <outdir>/<scenario>_report.json.
/// Throws Error("config", ...) on invalid configs (exit 2) and
/// HypothesisFailure (exit 3); check failures show up as !all_pass (exit 1).
RunReport run_scenario(const nlohmann::json& config,
                       const std::string& output_dir);

/// Catalog of the eight scenarios with required keys and hypothesis notes.
nlohmann::json scenario_catalog();

// Config building blocks, exposed for tests.
SamplerSpec sampler_from_json(const nlohmann::json& j);
SpacePtr space_from_json(const nlohmann::json& j);
Transformation map_from_json(const nlohmann::json& j, const SpacePtr& space);
Observable observable_from_json(const nlohmann::json& j, int dim);
SystemSpec system_from_json(const nlohmann::json& j);

}  // namespace ergolab

#endif
