#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace degen {

// Largest alphabet representable by a DegenerateSymbol: one bit per byte value.
inline constexpr std::size_t kMaxAlphabetSize = 256;

// Characters with syntactic meaning that can never be alphabet members.
// '#' is the index separator; brackets and ',' belong to the bracket grammar.
bool is_reserved_char(char c) noexcept;

// An ordered set of distinct single-byte symbols. The order defines ranks
// 0..size()-1, which is also the bit order of DegenerateSymbol masks and the
// member order used by the canonical bracket formatter.
class Alphabet {
 public:
  // Throws Error(InvalidAlphabet) on an empty, duplicated or reserved symbol.
  explicit Alphabet(std::string_view symbols);

  // {A, C, G, T}, the nucleotide alphabet behind IUPAC codes.
  static const Alphabet& dna();

  std::size_t size() const noexcept { return symbols_.size(); }
  std::string_view symbols() const noexcept { return symbols_; }
  char symbol(std::size_t rank) const { return symbols_.at(rank); }

  std::optional<std::size_t> rank(char c) const noexcept {
    const auto r = rank_[static_cast<unsigned char>(c)];
    if (r < 0) return std::nullopt;
    return static_cast<std::size_t>(r);
  }
  bool contains(char c) const noexcept { return rank(c).has_value(); }

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> rank_;
};

}  // namespace degen
