#pragma once

// Character n-gram language identifier (n = 1..4, add-one smoothing).

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "forge/corpus.hpp"
#include "json.hpp"

namespace forge::langid {

inline constexpr int kMaxOrder = 4;

/// Per-order add-one estimates. Each order reserves one pseudo-type for all
/// unseen n-grams, so for order n:
///   P(g) = (count(g) + 1) / (total + types + 1),  P(unseen) = 1 / (total + types + 1)
/// and the observed probabilities plus the unseen mass sum to one.
struct OrderTable {
  std::unordered_map<std::string, double> logprob;
  double unseen_logprob = 0.0;
  uint64_t total = 0;
};

struct LangProfile {
  std::string lang;
  std::array<OrderTable, kMaxOrder> orders;

  double logprob(int n, const std::string& gram) const;
};

using LangProfileSet = std::vector<LangProfile>;

/// NFC + lowercase + whitespace collapsed to single spaces, trimmed.
std::u32string prepare(std::string_view text);
std::vector<std::string> char_ngrams(std::u32string_view prepared, int n);

LangProfile train_profile(std::span<const Sentence> corpus, const std::string& lang);
LangProfile train_profile(std::span<const std::string> lines, const std::string& lang);

/// Mean log-probability per n-gram over all orders.
double normalized_log_likelihood(std::u32string_view prepared, const LangProfile& profile);

struct Classification {
  std::string lang;
  double margin = 0.0;  // best minus second-best normalized log-likelihood
};

Classification classify(std::string_view text, const LangProfileSet& profiles);

const LangProfile* find_profile(const LangProfileSet& profiles, std::string_view lang);

nlohmann::json to_json(const LangProfileSet& profiles);
LangProfileSet profiles_from_json(const nlohmann::json& doc);
void save_profiles(const std::filesystem::path& path, const LangProfileSet& profiles);
LangProfileSet load_profiles(const std::filesystem::path& path);

}  // namespace forge::langid
