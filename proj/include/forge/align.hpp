#pragma once

// IBM Model 1 word alignment over subword IDs, trained in both directions and
// symmetrized, and the undirected link counts c(i, j) the transfer graph is
// built from.

#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace forge::align {

using TokenId = uint32_t;
inline constexpr TokenId kNull = std::numeric_limits<TokenId>::max();

struct EncodedPair {
  std::vector<TokenId> src;
  std::vector<TokenId> tgt;
};

std::vector<EncodedPair> reversed(std::span<const EncodedPair> bitext);

inline uint64_t pack(TokenId a, TokenId b) { return (uint64_t{a} << 32) | b; }
inline TokenId first_of(uint64_t key) { return static_cast<TokenId>(key >> 32); }
inline TokenId second_of(uint64_t key) { return static_cast<TokenId>(key & 0xFFFFFFFFu); }

/// Lexical table t(generated | conditioning). The conditioning side is the
/// side that includes NULL; for every conditioning token the probabilities of
/// the tokens it generates sum to one.
class TranslationTable {
 public:
  double prob(TokenId conditioning, TokenId generated) const;
  void set(TokenId conditioning, TokenId generated, double p) { t_[pack(conditioning, generated)] = p; }
  size_t size() const { return t_.size(); }
  const std::unordered_map<uint64_t, double>& entries() const { return t_; }

  /// Sum over generated tokens, per conditioning token.
  std::unordered_map<TokenId, double> row_sums() const;

  /// TSV rows "conditioning \t generated \t prob" sorted by key; NULL is "NULL".
  std::string serialize() const;
  static TranslationTable parse(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static TranslationTable load(const std::filesystem::path& path);

 private:
  std::unordered_map<uint64_t, double> t_;
};

/// Trains t(tgt | src ∪ NULL). `loglik`, when given, receives the corpus
/// log-likelihood before each EM update and once more after the last one.
TranslationTable train_ibm1(std::span<const EncodedPair> bitext, int iterations, size_t shards = 1,
                            std::vector<double>* loglik = nullptr);

double corpus_log_likelihood(const TranslationTable& table, std::span<const EncodedPair> bitext, size_t shards = 1);

struct Link {
  uint32_t src_pos = 0;
  uint32_t tgt_pos = 0;
  auto operator<=>(const Link&) const = default;
};

enum class Symmetrization { Intersection, GrowDiag };

Symmetrization parse_symmetrization(std::string_view name);

/// Per target position, the best source position (NULL links dropped).
std::vector<Link> viterbi_forward(const TranslationTable& fwd, const EncodedPair& pair);
/// Per source position, the best target position, using t(src | tgt ∪ NULL).
std::vector<Link> viterbi_backward(const TranslationTable& bwd, const EncodedPair& pair);

std::vector<Link> intersect(std::span<const Link> a, std::span<const Link> b);
std::vector<Link> grow_diag(std::span<const Link> a, std::span<const Link> b);

std::vector<Link> align_pair(const TranslationTable& fwd, const TranslationTable& bwd, const EncodedPair& pair,
                             Symmetrization mode = Symmetrization::Intersection);

std::string to_pharaoh(std::span<const Link> links);
std::vector<Link> parse_pharaoh(std::string_view line);

/// Symmetric sparse counts; c(i, j) == c(j, i) always.
class LinkCounts {
 public:
  void add_link(TokenId a, TokenId b, uint64_t n = 1);
  uint64_t get(TokenId i, TokenId j) const;
  const std::unordered_map<uint64_t, uint64_t>& entries() const { return c_; }
  bool symmetric() const;

  /// Sorted TSV triplets "i \t j \t count".
  std::string serialize() const;
  static LinkCounts parse(std::string_view text);

 private:
  std::unordered_map<uint64_t, uint64_t> c_;
};

/// For each link, increments c[src_piece][tgt_piece] and c[tgt_piece][src_piece].
LinkCounts count_links(std::span<const EncodedPair> bitext, std::span<const std::vector<Link>> links);

}  // namespace forge::align
