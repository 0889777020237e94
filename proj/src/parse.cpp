#include "degen/parse.hpp"

#include <cctype>

#include "degen/error.hpp"

namespace degen {
namespace {

std::string describe(char c) {
  if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
  return "byte " + std::to_string(static_cast<unsigned char>(c));
}

[[noreturn]] void unknown_character(char c, std::size_t offset) {
  throw ParseError(Errc::UnknownCharacter,
                   "unknown character " + describe(c) + " at offset " +
                       std::to_string(offset),
                   offset);
}

bool is_group_filler(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Member sets of the IUPAC nucleotide codes, as bit masks over A=1 C=2 G=4 T=8.
std::uint64_t iupac_mask(char code) {
  switch (std::toupper(static_cast<unsigned char>(code))) {
    case 'A': return 0b0001;
    case 'C': return 0b0010;
    case 'G': return 0b0100;
    case 'T': return 0b1000;
    case 'R': return 0b0101;  // A G
    case 'Y': return 0b1010;  // C T
    case 'S': return 0b0110;  // C G
    case 'W': return 0b1001;  // A T
    case 'K': return 0b1100;  // G T
    case 'M': return 0b0011;  // A C
    case 'B': return 0b1110;  // C G T
    case 'D': return 0b1101;  // A G T
    case 'H': return 0b1011;  // A C T
    case 'V': return 0b0111;  // A C G
    case 'N': return 0b1111;
    default: return 0;
  }
}

constexpr std::string_view kIupacByMask = "-ACMGRSVTWYHKDBN";

}  // namespace

DegenerateString parse_bracket(std::string_view input,
                               const Alphabet& alphabet) {
  std::vector<DegenerateSymbol> symbols;
  std::size_t pos = 0;
  while (pos < input.size()) {
    const char c = input[pos];
    if (c != '[') {
      const auto r = alphabet.rank(c);
      if (!r) unknown_character(c, pos + 1);
      symbols.push_back(DegenerateSymbol::solid(*r));
      ++pos;
      continue;
    }
    const std::size_t open = pos + 1;
    DegenerateSymbol::Words words{};
    bool any = false;
    ++pos;
    while (pos < input.size() && input[pos] != ']') {
      const char m = input[pos];
      if (!is_group_filler(m)) {
        const auto r = alphabet.rank(m);
        if (!r) unknown_character(m, pos + 1);
        words[*r / 64] |= std::uint64_t{1} << (*r % 64);
        any = true;
      }
      ++pos;
    }
    if (pos == input.size()) {
      throw ParseError(Errc::UnclosedBracket,
                       "unclosed '[' at offset " + std::to_string(open), open);
    }
    if (!any) {
      throw ParseError(Errc::EmptyBracket,
                       "empty bracket group at offset " + std::to_string(open),
                       open);
    }
    symbols.push_back(DegenerateSymbol::from_words(words));
    ++pos;
  }
  return DegenerateString(std::move(symbols));
}

DegenerateString parse_solid(std::string_view input, const Alphabet& alphabet) {
  std::vector<DegenerateSymbol> symbols;
  symbols.reserve(input.size());
  for (std::size_t pos = 0; pos < input.size(); ++pos) {
    const auto r = alphabet.rank(input[pos]);
    if (!r) unknown_character(input[pos], pos + 1);
    symbols.push_back(DegenerateSymbol::solid(*r));
  }
  return DegenerateString(std::move(symbols));
}

DegenerateString parse_iupac(std::string_view input) {
  std::vector<DegenerateSymbol> symbols;
  symbols.reserve(input.size());
  for (std::size_t pos = 0; pos < input.size(); ++pos) {
    const auto mask = iupac_mask(input[pos]);
    if (mask == 0) {
      throw ParseError(Errc::UnknownCode,
                       "unknown IUPAC code " + describe(input[pos]) +
                           " at offset " + std::to_string(pos + 1),
                       pos + 1);
    }
    symbols.push_back(DegenerateSymbol::from_words({mask, 0, 0, 0}));
  }
  return DegenerateString(std::move(symbols));
}

std::string format_bracket(const DegenerateString& s, const Alphabet& alphabet) {
  std::string out;
  out.reserve(s.size());
  for (const auto& sym : s) {
    if (sym.is_solid()) {
      out += alphabet.symbol(sym.first());
      continue;
    }
    out += '[';
    for (auto r : sym.members()) out += alphabet.symbol(r);
    out += ']';
  }
  return out;
}

std::string format_iupac(const DegenerateString& s) {
  std::string out;
  out.reserve(s.size());
  for (const auto& sym : s) {
    const auto mask = sym.words()[0];
    if (mask == 0 || mask > 0b1111 || sym.words()[1] || sym.words()[2] ||
        sym.words()[3]) {
      throw Error(Errc::InvalidArgument,
                  "symbol is not a nucleotide set over {A,C,G,T}");
    }
    out += kIupacByMask[mask];
  }
  return out;
}

}  // namespace degen
