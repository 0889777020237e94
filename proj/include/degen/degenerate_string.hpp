#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "degen/alphabet.hpp"

namespace degen {

// A non-empty subset of an alphabet, stored as a bit set over symbol ranks.
// 256 bits cover every single-byte alphabet; intersection is four word ANDs.
class DegenerateSymbol {
 public:
  static constexpr std::size_t kWords = kMaxAlphabetSize / 64;
  using Words = std::array<std::uint64_t, kWords>;

  // The solid symbol {rank}.
  static DegenerateSymbol solid(std::size_t rank);

  // Throws Error(InvalidArgument) when `ranks` is empty or out of range.
  static DegenerateSymbol of(std::span<const std::size_t> ranks);
  static DegenerateSymbol of(std::initializer_list<std::size_t> ranks) {
    return of(std::span<const std::size_t>(ranks.begin(), ranks.size()));
  }
  static DegenerateSymbol from_words(const Words& words);

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool is_solid() const noexcept { return size() == 1; }

  bool contains(std::size_t rank) const noexcept {
    return rank < kMaxAlphabetSize &&
           ((words_[rank / 64] >> (rank % 64)) & 1u) != 0;
  }

  // Smallest member rank; for a solid symbol, its only member.
  std::size_t first() const noexcept;

  // Member ranks in increasing order.
  std::vector<std::size_t> members() const;

  const Words& words() const noexcept { return words_; }

  bool operator==(const DegenerateSymbol&) const = default;

 private:
  DegenerateSymbol() = default;
  Words words_{};
};

// x ≈ y: the two sets share at least one symbol.
inline bool symbols_match(const DegenerateSymbol& a,
                          const DegenerateSymbol& b) noexcept {
  std::uint64_t common = 0;
  for (std::size_t w = 0; w < DegenerateSymbol::kWords; ++w) {
    common |= a.words()[w] & b.words()[w];
  }
  return common != 0;
}

// A sequence of degenerate symbols. Element access through operator[] is
// 0-based like any container; every *position* the type reports or accepts
// (non_solid_positions, substring) is 1-based.
class DegenerateString {
 public:
  DegenerateString() = default;
  explicit DegenerateString(std::vector<DegenerateSymbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  const DegenerateSymbol& operator[](std::size_t offset) const {
    return symbols_[offset];
  }
  std::span<const DegenerateSymbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  // Strictly increasing 1-based positions whose symbol has two or more members.
  std::span<const std::size_t> non_solid_positions() const noexcept {
    return non_solid_;
  }
  std::size_t non_solid_count() const noexcept { return non_solid_.size(); }
  bool is_solid() const noexcept { return non_solid_.empty(); }
  bool is_conservative(std::size_t k) const noexcept {
    return non_solid_.size() <= k;
  }

  // Symbols i..j (1-based, inclusive). i == j + 1 yields the empty string.
  // Throws Error(OutOfRange) unless 1 <= i <= j + 1 and j <= size().
  DegenerateString substring(std::size_t i, std::size_t j) const;

  bool operator==(const DegenerateString& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<DegenerateSymbol> symbols_;
  std::vector<std::size_t> non_solid_;
};

}  // namespace degen
