#pragma once

// Deterministic synthetic corpora in two pseudo-languages: a Latin-script
// "en" with a small class grammar and a Hebrew-block "he" that translates it
// word for word through a fixed 1-1 dictionary and reorders the words.
// The raw bitext carries planted violations of every cleaning rule, in known
// numbers.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "forge/align.hpp"
#include "forge/rng.hpp"
#include "json.hpp"

namespace forge::toy {

struct Dictionary {
  std::vector<std::string> en;
  std::vector<std::string> he;  // he[i] translates en[i]
  std::vector<int> word_class;  // grammar class of en[i]
};

Dictionary make_dictionary(uint64_t seed);

/// A translated sentence with its gold word alignment.
struct GoldPair {
  std::vector<std::string> en;
  std::vector<std::string> he;
  std::vector<align::Link> links;  // (en position, he position)
};

class SentenceGenerator {
 public:
  SentenceGenerator(const Dictionary& dict, uint64_t seed);

  /// Distinct dictionary words following one of the grammar templates.
  std::vector<size_t> words(size_t min_len = 4, size_t max_len = 12);
  std::vector<size_t> words_of_length(size_t len);
  GoldPair translate(const std::vector<size_t>& word_ids);
  GoldPair pair() { return translate(words()); }
  std::string english() { return join(words(), true); }
  std::string hebrew() { return join(words(), false); }
  /// Digit strings or random letter runs.
  std::string gibberish(size_t tokens);

  std::string join(const std::vector<size_t>& ids, bool english) const;
  Rng& rng() { return rng_; }

 private:
  const Dictionary& dict_;
  Rng rng_;
  std::vector<std::vector<size_t>> by_class_;
};

struct ToyConfig {
  uint64_t seed = 20240607;
  size_t bitext_lines = 10000;
  std::map<std::string, size_t> planted{{"malformed", 60},  {"invalid_utf8", 20}, {"empty", 40},
                                        {"length", 30},     {"overlap", 150},     {"ratio", 200},
                                        {"duplicate", 300}, {"offtarget", 150},   {"ambiguous", 120}};
  size_t noisy_clean = 400;  // clean lines carrying entity/control noise
  size_t synthetic_pairs = 1000;
  size_t mono_train_lines = 4000;
  size_t stream_lines = 3000;
  size_t label_lines = 1000;
  double gibberish_fraction = 0.3;
  size_t langid_lines = 1500;
  size_t heldout_lines = 300;  // per language
};

struct ToyCorpus {
  Dictionary dictionary;
  std::vector<std::string> bitext;     // raw "en \t he" lines
  std::vector<std::string> synthetic;  // "en \t synthetic he"
  std::vector<std::string> mono_train;
  std::vector<std::string> stream;
  std::vector<bool> stream_bad;
  std::vector<std::pair<std::string, bool>> labels;  // (text, is_bad)
  std::vector<std::string> langid_en;
  std::vector<std::string> langid_he;
  std::vector<std::pair<std::string, std::string>> heldout;  // (lang, text)
  std::map<std::string, size_t> planted;
  size_t clean_pairs = 0;
  size_t noisy_clean = 0;

  nlohmann::ordered_json summary() const;
};

ToyCorpus make_toy_corpus(const ToyConfig& cfg = {});

/// Writes bitext.tsv, synthetic.tsv, mono_en.txt, stream.txt, stream_gold.txt,
/// labels.tsv, langid_en.txt, langid_he.txt, langid_heldout.tsv,
/// dictionary.tsv and planted.json.
void write_toy_corpus(const ToyCorpus& corpus, const std::filesystem::path& dir);

/// `n` unique translated pairs with gold links, for alignment experiments.
std::vector<GoldPair> make_gold_bitext(const Dictionary& dict, size_t n, uint64_t seed);

}  // namespace forge::toy
