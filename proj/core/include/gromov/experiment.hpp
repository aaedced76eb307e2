#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gromov {

enum class ExperimentKind {
  ScalingGeodesic,
  ProductUpper,
  TruncationLower,
  LatticeRatio,
  LatticeWitness,
  IsometryExample,
};

const char* to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

// Declarative experiment description, loaded from a flat "key = value" file
// ('#' starts a comment). Common keys: kind (required), name, seed, threads,
// out_dir, budget. Kind-specific keys are validated by run_experiment.
struct ExperimentConfig {
  std::string name;
  ExperimentKind kind;
  std::uint64_t seed = 0;
  int threads = 1;
  std::int64_t node_budget = -1;  // < 0: default
  std::filesystem::path out_dir = ".";
  std::map<std::string, std::string> params;

  static ExperimentConfig parse(std::istream& in);
  static ExperimentConfig load(const std::filesystem::path& path);
};

struct ExperimentResult {
  // 0 = success, 2 = validation failure, 3 = cap/budget exhaustion with
  // partial output.
  int exit_code = 0;
  std::vector<std::filesystem::path> outputs;
  std::string summary;  // one line for the CLI
};

// Executes the configured pipeline, writes <name>.csv and <name>_manifest.txt
// into out_dir (atomically), and reports the exit status. Identical config and
// seed produce byte-identical CSV bodies for any thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace gromov
