#pragma once

// Unigram-LM subword model: training by Viterbi (hard) EM with likelihood-loss
// pruning, Viterbi encoding, and concatenative decoding. Words are prefixed
// with the boundary marker U+2581 so decoding is pure concatenation.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace forge::subword {

inline constexpr std::string_view kBoundary = "\xE2\x96\x81";  // U+2581
inline constexpr char32_t kBoundaryCp = 0x2581;
inline constexpr std::string_view kUnkSurface = "\xE2\x81\x87";  // U+2047, what decode prints for UNK

enum SpecialId : uint32_t {
  kUnk = 0,
  kBos = 1,
  kEos = 2,
  kTag2He = 3,
  kTag2En = 4,
  kTag2Syn = 5,
};
inline constexpr uint32_t kNumSpecials = 6;

std::string_view special_name(uint32_t id);
/// Maps "2he"/"2en"/"2syn" to their reserved IDs.
std::optional<uint32_t> tag_id(std::string_view token);

struct Piece {
  std::string text;
  double logprob = 0.0;
};

struct StringHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

class SubwordModel {
 public:
  SubwordModel() = default;
  /// Normal pieces; they receive IDs kNumSpecials, kNumSpecials+1, ...
  explicit SubwordModel(std::vector<Piece> pieces);

  size_t size() const { return kNumSpecials + pieces_.size(); }
  std::span<const Piece> pieces() const { return pieces_; }
  std::string_view piece(uint32_t id) const;
  /// Log-probability of a normal piece or the UNK penalty for kUnk.
  double logprob(uint32_t id) const;
  double unk_logprob() const { return unk_logprob_; }
  std::optional<uint32_t> find(std::string_view piece) const;

  /// Viterbi segmentation; characters outside the model become kUnk.
  std::vector<uint32_t> encode(std::string_view text) const;
  /// As encode, but a leading "2he"/"2en"/"2syn" token maps to its reserved ID.
  std::vector<uint32_t> encode_tagged(std::string_view text) const;
  std::vector<std::string> encode_pieces(std::string_view text) const;
  /// Sum of piece log-probabilities of a segmentation.
  double score(std::span<const uint32_t> ids) const;

  /// Throws UnknownId for IDs outside the model.
  std::string decode(std::span<const uint32_t> ids) const;

  std::string serialize() const;
  static SubwordModel parse(std::string_view data);
  void save(const std::filesystem::path& path) const;
  static SubwordModel load(const std::filesystem::path& path);

 private:
  void encode_word(std::string_view marked_word, std::vector<uint32_t>& out) const;

  std::vector<Piece> pieces_;
  std::unordered_map<std::string, uint32_t, StringHash, std::equal_to<>> index_;
  size_t max_piece_chars_ = 1;
  double unk_logprob_ = -20.0;
};

struct TrainConfig {
  uint32_t vocab_size = 32000;  // including the reserved specials
  uint32_t seed_max_len = 8;    // longest seed substring, in characters
  uint32_t seed_factor = 4;     // seed vocabulary cap = seed_factor * vocab_size
  double prune_fraction = 0.2;
  uint32_t em_iterations = 2;   // per pruning round
  size_t shards = 1;
};

/// Corpus log-likelihood at every E-step, grouped by pruning round.
struct TrainTrace {
  std::vector<std::vector<double>> rounds;
};

SubwordModel train_unigram(std::span<const std::string> corpus, const TrainConfig& cfg, TrainTrace* trace = nullptr);

/// Byte offsets of each code point start plus the end offset.
std::vector<size_t> char_offsets(std::string_view utf8);

}  // namespace forge::subword
