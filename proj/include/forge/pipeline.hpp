#pragma once

// Config-driven pipeline:
//   langid -> clean -> sample -> subword -> lm -> align -> graph -> tag
// Every stage writes into <work_dir>/<stage>/ and leaves a stamp holding a
// content hash of its parameters and inputs. A stage whose stamp matches and
// whose outputs are intact is skipped.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/align.hpp"
#include "forge/cleaning.hpp"
#include "forge/graph_embed.hpp"
#include "forge/manifest.hpp"
#include "forge/ngram_lm.hpp"
#include "forge/subword.hpp"
#include "json.hpp"

namespace forge::pipeline {

inline const std::vector<std::string> kStageOrder{"langid", "clean", "sample", "subword", "lm", "align", "graph", "tag"};

struct SampleParams {
  uint64_t lines = 5000;
};

struct LmParams {
  int order = 5;
  double discount = lm::kDefaultDiscount;
  double target_bad_removed = 0.7;
  lm::ScoreMode mode = lm::ScoreMode::Normalized;
};

struct AlignParams {
  int iterations = 5;
  align::Symmetrization symmetrization = align::Symmetrization::Intersection;
};

struct GraphParams {
  size_t dim = 16;
  size_t hops = 2;
  graph::Activation activation = graph::Activation::Tanh;
  graph::BiasMode bias = graph::BiasMode::Row;
};

struct StageSpec {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

struct PipelineConfig {
  uint64_t seed = 1;
  size_t shards = 1;
  std::filesystem::path work_dir;
  /// Logical input name -> path (relative paths are resolved against the config file's directory).
  std::map<std::string, std::filesystem::path> inputs;
  std::vector<StageSpec> stages;

  cleaning::CleanConfig clean;
  SampleParams sample;
  subword::TrainConfig subword;
  LmParams lm;
  AlignParams align;
  GraphParams graph;

  bool has_stage(const std::string& name) const;
  /// Inputs each configured stage reads.
  std::vector<std::string> required_inputs() const;

  /// Throws ConfigInvalid on unknown keys, bad values, unknown or misordered stages.
  static PipelineConfig from_json(const nlohmann::ordered_json& doc, const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& path);
};

struct RunOptions {
  /// Ignore stamps and recompute every stage.
  bool force = false;
};

/// Runs all configured stages and writes <work_dir>/manifest.json (timing-free)
/// and <work_dir>/run_log.json (timings, cache hits). Throws InputMissing
/// before any work when an input is absent, StageFailed when a stage throws;
/// the manifest then covers the stages that finished.
Manifest run_pipeline(const PipelineConfig& cfg, const RunOptions& opts = {});

}  // namespace forge::pipeline
