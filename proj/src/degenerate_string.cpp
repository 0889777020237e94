#include "degen/degenerate_string.hpp"

#include <string>

#include "degen/error.hpp"

namespace degen {

DegenerateSymbol DegenerateSymbol::solid(std::size_t rank) {
  return of({rank});
}

DegenerateSymbol DegenerateSymbol::of(std::span<const std::size_t> ranks) {
  if (ranks.empty()) {
    throw Error(Errc::InvalidArgument, "degenerate symbol must be non-empty");
  }
  DegenerateSymbol s;
  for (auto r : ranks) {
    if (r >= kMaxAlphabetSize) {
      throw Error(Errc::InvalidArgument,
                  "symbol rank out of range: " + std::to_string(r));
    }
    s.words_[r / 64] |= std::uint64_t{1} << (r % 64);
  }
  return s;
}

DegenerateSymbol DegenerateSymbol::from_words(const Words& words) {
  DegenerateSymbol s;
  s.words_ = words;
  if (s.size() == 0) {
    throw Error(Errc::InvalidArgument, "degenerate symbol must be non-empty");
  }
  return s;
}

std::size_t DegenerateSymbol::first() const noexcept {
  for (std::size_t w = 0; w < kWords; ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return kMaxAlphabetSize;
}

std::vector<std::size_t> DegenerateSymbol::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < kWords; ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

DegenerateString::DegenerateString(std::vector<DegenerateSymbol> symbols)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!symbols_[i].is_solid()) non_solid_.push_back(i + 1);
  }
}

DegenerateString DegenerateString::substring(std::size_t i,
                                             std::size_t j) const {
  if (i < 1 || i > j + 1 || j > size()) {
    throw Error(Errc::OutOfRange, "substring [" + std::to_string(i) + ".." +
                                      std::to_string(j) +
                                      "] out of range for length " +
                                      std::to_string(size()));
  }
  return DegenerateString(std::vector<DegenerateSymbol>(
      symbols_.begin() + static_cast<std::ptrdiff_t>(i - 1),
      symbols_.begin() + static_cast<std::ptrdiff_t>(j)));
}

}  // namespace degen
