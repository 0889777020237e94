#include "degen/alphabet.hpp"

#include <cctype>

#include "degen/error.hpp"

namespace degen {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidAlphabet: return "InvalidAlphabet";
    case Errc::UnknownCharacter: return "UnknownCharacter";
    case Errc::EmptyBracket: return "EmptyBracket";
    case Errc::UnclosedBracket: return "UnclosedBracket";
    case Errc::UnknownCode: return "UnknownCode";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MissingSeparator: return "MissingSeparator";
    case Errc::SeparatorNotUnique: return "SeparatorNotUnique";
    case Errc::EmptyPattern: return "EmptyPattern";
    case Errc::EmptyFile: return "EmptyFile";
    case Errc::SequenceBeforeHeader: return "SequenceBeforeHeader";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_reserved_char(char c) noexcept {
  return c == '#' || c == '[' || c == ']' || c == ',' ||
         std::isspace(static_cast<unsigned char>(c)) != 0;
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  rank_.fill(-1);
  if (symbols_.empty()) {
    throw Error(Errc::InvalidAlphabet, "alphabet must not be empty");
  }
  for (std::size_t r = 0; r < symbols_.size(); ++r) {
    const char c = symbols_[r];
    if (is_reserved_char(c)) {
      throw Error(Errc::InvalidAlphabet,
                  std::string("reserved character in alphabet: '") + c + "'");
    }
    auto& slot = rank_[static_cast<unsigned char>(c)];
    if (slot >= 0) {
      throw Error(Errc::InvalidAlphabet,
                  std::string("duplicate alphabet symbol: '") + c + "'");
    }
    slot = static_cast<std::int16_t>(r);
  }
}

const Alphabet& Alphabet::dna() {
  static const Alphabet kDna("ACGT");
  return kDna;
}

}  // namespace degen
