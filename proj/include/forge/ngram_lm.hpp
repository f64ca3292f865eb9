#pragma once

// Interpolated Kneser-Ney n-gram model over subword IDs, stored as ARPA-style
// probability/backoff tables, plus score-threshold calibration for
// monolingual filtering.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "forge/subword.hpp"

namespace forge::lm {

using TokenId = uint32_t;
using NGram = std::vector<TokenId>;

inline constexpr TokenId kUnk = subword::kUnk;
inline constexpr TokenId kBos = subword::kBos;
inline constexpr TokenId kEos = subword::kEos;
inline constexpr double kDefaultDiscount = 0.75;

struct NGramHash {
  size_t operator()(const NGram& g) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (TokenId t : g) {
      h ^= t;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct Entry {
  double log10prob = 0.0;
  double log10backoff = 0.0;
  bool has_backoff = false;
};

using NGramTable = std::unordered_map<NGram, Entry, NGramHash>;

class NGramModel {
 public:
  NGramModel() = default;
  explicit NGramModel(std::vector<NGramTable> tables);

  int order() const { return static_cast<int>(tables_.size()); }
  const NGramTable& table(int n) const { return tables_.at(static_cast<size_t>(n - 1)); }

  /// Predictable vocabulary: every unigram except <s>. Always holds <unk> and </s>.
  const std::vector<TokenId>& vocabulary() const { return vocab_; }
  bool in_vocabulary(TokenId t) const;

  /// Natural-log P(word | history); history is oldest-first and may start
  /// with <s>. Words outside the vocabulary are scored as <unk>.
  double log_prob(std::span<const TokenId> history, TokenId word) const;

  std::string to_arpa() const;
  static NGramModel from_arpa(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static NGramModel load(const std::filesystem::path& path);

 private:
  std::vector<NGramTable> tables_;
  std::vector<TokenId> vocab_;
};

NGramModel train_lm(std::span<const std::vector<TokenId>> corpus, int order, double discount = kDefaultDiscount,
                    std::vector<std::string>* warnings = nullptr);

enum class ScoreMode { Normalized, Raw };

/// Normalized: log P(sentence, </s>) / (tokens + 1), in nats. Raw: the total.
double score(const NGramModel& model, std::span<const TokenId> sentence, ScoreMode mode = ScoreMode::Normalized);

/// exp(-(sum of log-probs) / (tokens + one </s> per sentence)).
double perplexity(const NGramModel& model, std::span<const std::vector<TokenId>> corpus);

enum class Label { Good, Bad };

struct LabeledScore {
  double score = 0.0;
  Label label = Label::Good;
};

struct Threshold {
  double cutoff = 0.0;  // a sentence is removed iff score < cutoff
  double achieved_bad_removed = 0.0;
  double achieved_good_retained = 0.0;
  double achieved_total_retained = 0.0;
};

/// Among cutoffs -inf, +inf and midpoints of adjacent distinct scores, picks
/// the one keeping the most good samples while removing at least
/// target_bad_removed of the bad ones; ties go to the smaller cutoff.
Threshold calibrate_threshold(std::span<const LabeledScore> samples, double target_bad_removed);

std::string threshold_to_json(const Threshold& t);
Threshold threshold_from_json(std::string_view text);

/// Indices of sentences with score >= cutoff, in input order.
std::vector<size_t> filter_mono(std::span<const std::vector<TokenId>> sentences, const NGramModel& model,
                                const Threshold& threshold, ScoreMode mode = ScoreMode::Normalized,
                                size_t shards = 1);

}  // namespace forge::lm
