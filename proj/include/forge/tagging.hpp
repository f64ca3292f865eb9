#pragma once

// Direction tags for multilingual training data, the merge of original and
// synthetic bitext, and the reversible emoji escape "<U+XXXX>".

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forge/corpus.hpp"
#include "json.hpp"

namespace forge::tagging {

inline constexpr std::string_view kTagHe = "2he";
inline constexpr std::string_view kTagEn = "2en";
inline constexpr std::string_view kTagSyn = "2syn";

bool is_tag(std::string_view token);

/// {"en", "he"}
std::span<const std::string> default_langs();

/// Prepends "2syn" when the synthetic Hebrew side is the target, otherwise
/// "2" + target_lang. Throws UnknownLanguage for codes outside `langs`.
Sentence tag(const Sentence& sentence, std::string_view target_lang, bool synthetic,
             std::span<const std::string> langs = default_langs());
/// Removes a leading tag token, if any.
Sentence untag(const Sentence& sentence);
/// The leading tag token, if any.
std::optional<std::string> leading_tag(std::string_view text);


/// Pairs are stored English source, Hebrew target. Every pair is emitted in
/// both directions with its source tagged, then the whole list is shuffled.
std::vector<SentencePair> merge_synthetic(std::span<const SentencePair> original,
                                          std::span<const SentencePair> synthetic, uint64_t seed);

struct CodepointRange {
  char32_t first;
  char32_t last;
};

class EmojiTable {
 public:
  EmojiTable();  // built-in ranges
  explicit EmojiTable(std::vector<CodepointRange> ranges);

  bool contains(char32_t cp) const;
  const std::vector<CodepointRange>& ranges() const { return ranges_; }

  /// {"ranges": [["1F300", "1F5FF"], ...]} with hex bounds, inclusive.
  nlohmann::json to_json() const;
  static EmojiTable from_json(const nlohmann::json& j);
  static EmojiTable load(const std::filesystem::path& path);

 private:
  std::vector<CodepointRange> ranges_;
};

/// Replaces every emoji codepoint with "<U+XXXX>" (uppercase, minimal hex).
/// A literal '<' that would itself read as an escape is written as "<U+3C>",
/// so decoding is an exact inverse. Invalid UTF-8 bytes pass through.
std::string emoji_encode(std::string_view text, const EmojiTable& table = EmojiTable());

/// Replaces each well-formed escape by its codepoint; anything else is kept.
std::string emoji_decode(std::string_view text);

}  // namespace forge::tagging
