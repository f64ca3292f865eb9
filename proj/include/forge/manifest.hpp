#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace forge {

inline constexpr std::string_view kToolVersion = "0.3.0";

struct StageRecord {
  std::string name;
  uint64_t lines_in = 0;
  uint64_t lines_kept = 0;
  std::map<std::string, uint64_t> rejections;
  /// Output file name -> SHA-256 of its contents.
  std::map<std::string, std::string> outputs;
  /// Stage-specific deterministic figures (retained fractions, thresholds...).
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  double wall_seconds = 0.0;
  bool cached = false;

  void reject(const std::string& reason, uint64_t n = 1) { rejections[reason] += n; }
  uint64_t rejected() const;
  /// lines_kept + sum(rejections) == lines_in
  bool conserved() const { return lines_kept + rejected() == lines_in; }
};

struct Manifest {
  std::string tool_version{kToolVersion};
  std::string config_hash;
  std::vector<StageRecord> stages;

  StageRecord& add_stage(std::string name);
  const StageRecord* find(std::string_view name) const;
  bool conserved() const;

  /// Full document including wall-clock timings and cache flags.
  nlohmann::ordered_json to_json() const;
  /// Only the fields that must be identical across repeated runs.
  nlohmann::ordered_json deterministic_json() const;
  static Manifest from_json(const nlohmann::ordered_json& doc);
};

nlohmann::ordered_json to_json(const StageRecord& stage, bool with_timing);
StageRecord stage_from_json(const nlohmann::ordered_json& doc);

}  // namespace forge
