#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forge {

enum class ErrorKind {
  MalformedLine,
  InvalidUtf8,
  MissingTokens,
  EmptySide,
  UnknownLanguage,
  EmptyCorpus,
  EmptyText,
  EmptySentence,
  VocabTooSmall,
  UnknownId,
  EmptyBitext,
  PositionOutOfRange,
  DimensionMismatch,
  MissingForwardCache,
  InvalidArgument,
  ConfigInvalid,
  InputMissing,
  StageFailed,
  Format,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code used by the CLI for each error class.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace forge
