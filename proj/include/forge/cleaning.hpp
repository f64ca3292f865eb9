#pragma once

// Bitext cleaning in three steps:
//   1. entity de-escaping, control/format character removal, punctuation
//      normalization and tokenization;
//   2. length, token-overlap and length-ratio filters, then exact dedup;
//   3. off-target language removal and one-to-many / many-to-one removal.
// Every numeric filter rejects only on strict excess of its threshold.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forge/corpus.hpp"
#include "forge/langid.hpp"
#include "forge/manifest.hpp"
#include "json.hpp"

namespace forge::cleaning {

struct CleanConfig {
  uint64_t max_tokens = 256;
  double overlap_threshold = 0.75;
  double max_ratio = 1.5;
  bool ratio_symmetric = true;
  std::pair<std::string, std::string> expected_langs{"en", "he"};

  /// Throws ConfigInvalid when a field is out of range.
  void validate() const;
  nlohmann::ordered_json to_json() const;
  /// Unknown keys are rejected; missing keys keep their defaults.
  static CleanConfig from_json(const nlohmann::ordered_json& doc);
};

namespace reason {
inline constexpr std::string_view kMalformed = "malformed";
inline constexpr std::string_view kInvalidUtf8 = "invalid_utf8";
inline constexpr std::string_view kEmpty = "empty";
inline constexpr std::string_view kLength = "length";
inline constexpr std::string_view kOverlap = "overlap";
inline constexpr std::string_view kRatio = "ratio";
inline constexpr std::string_view kDuplicate = "duplicate";
inline constexpr std::string_view kOfftarget = "offtarget";
inline constexpr std::string_view kAmbiguous = "ambiguous";
}  // namespace reason

/// Empty reason means Keep.
struct Verdict {
  std::string reason;

  bool keep() const { return reason.empty(); }
  static Verdict Keep() { return {}; }
  static Verdict Reject(std::string_view why) { return {std::string(why)}; }
};

std::string normalize(std::string_view text);
std::vector<std::string> tokenize(std::string_view text);

/// Normalizes and tokenizes both sides in place; text becomes the token join.
void prepare_pair(SentencePair& pair);

Verdict filter_length(const SentencePair& pair, const CleanConfig& cfg);
Verdict filter_overlap(const SentencePair& pair, const CleanConfig& cfg);
Verdict filter_ratio(const SentencePair& pair, const CleanConfig& cfg);
Verdict filter_offtarget(const SentencePair& pair, const langid::LangProfileSet& profiles, const CleanConfig& cfg);

/// Multiset intersection size of the two token sequences.
uint64_t token_overlap(std::span<const std::string> a, std::span<const std::string> b);

/// Removes exact (src.text, tgt.text) duplicates, keeping first occurrences.
std::vector<SentencePair> dedup(std::vector<SentencePair> pairs, std::vector<SentencePair>* removed = nullptr);

/// Drops every pair whose source maps to two or more distinct targets, or
/// whose target maps to two or more distinct sources.
std::vector<SentencePair> remove_ambiguous(std::vector<SentencePair> pairs,
                                           std::vector<SentencePair>* removed = nullptr);

struct Rejection {
  Origin origin;
  std::string reason;
  std::string src;
  std::string tgt;
};

struct CleanResult {
  std::vector<SentencePair> kept;
  std::vector<Rejection> rejected;
  StageRecord stats;
};

/// Runs all three steps over raw TSV lines. `profiles` may be null, in which
/// case the off-target filter is skipped.
CleanResult clean_corpus(std::span<const std::string> lines, const CleanConfig& cfg,
                         const langid::LangProfileSet* profiles, const std::string& file_name = "",
                         size_t shards = 1);

std::string format_rejection(const Rejection& r);

}  // namespace forge::cleaning
