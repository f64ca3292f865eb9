#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forge/rng.hpp"

namespace forge {

struct Sentence {
  std::string text;
  std::optional<std::vector<std::string>> tokens;
  std::optional<std::string> lang;
};

/// Where a pair came from: file name and 1-based line number.
struct Origin {
  std::string file;
  uint64_t line = 0;
};

struct SentencePair {
  Sentence src;
  Sentence tgt;
  Origin origin;
  bool synthetic = false;
};

/// Splits "src<TAB>tgt". Throws MalformedLine unless there is exactly one tab,
/// InvalidUtf8 if the line is not valid UTF-8.
SentencePair parse_pair(std::string_view line, Origin origin = {});
std::string serialize_pair(const SentencePair& pair);

std::string join_tokens(std::span<const std::string> tokens);
std::vector<std::string> split_whitespace(std::string_view text);

/// Single-pass uniform reservoir sampler. Items come back in first-seen order.
class ReservoirSampler {
 public:
  ReservoirSampler(uint64_t capacity, uint64_t seed);

  void offer(std::string line);
  uint64_t seen() const { return seen_; }
  std::vector<std::string> take() &&;

 private:
  uint64_t capacity_;
  uint64_t seen_ = 0;
  Rng rng_;
  std::vector<std::pair<uint64_t, std::string>> reservoir_;
};

std::vector<std::string> sample_lines(std::span<const std::string> lines, uint64_t n, uint64_t seed);

/// Reads all lines; strips a trailing '\r'. Throws InputMissing if absent.
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_lines(const std::filesystem::path& path, std::span<const std::string> lines);

/// Streaming line reader for inputs too large to hold in memory.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);
  bool next(std::string& line);
  uint64_t line_number() const { return line_no_; }

 private:
  std::ifstream in_;
  uint64_t line_no_ = 0;
};

}  // namespace forge
