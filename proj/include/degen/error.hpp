#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degen {

enum class Errc {
  InvalidAlphabet,
  UnknownCharacter,
  EmptyBracket,
  UnclosedBracket,
  UnknownCode,
  OutOfRange,
  MissingSeparator,
  SeparatorNotUnique,
  EmptyPattern,
  EmptyFile,
  SequenceBeforeHeader,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this exception. `code()` lets
// callers branch on the failure kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures also carry the 1-based character offset of the problem.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& message, std::size_t offset)
      : Error(code, message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace degen
