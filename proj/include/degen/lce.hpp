#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace degen {

using Rank = std::uint32_t;

// A solid sequence over an integer alphabet that ends with a unique
// separator. The separator must be the largest rank in the sequence.
class SolidSequence {
 public:
  // Throws Error(MissingSeparator) if the last element is not `separator`,
  // Error(SeparatorNotUnique) if it appears more than once, and
  // Error(InvalidArgument) if any rank exceeds it.
  SolidSequence(std::vector<Rank> data, Rank separator);

  std::span<const Rank> data() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }
  Rank operator[](std::size_t i) const noexcept { return data_[i]; }
  Rank separator() const noexcept { return separator_; }

 private:
  std::vector<Rank> data_;
  Rank separator_;
};

// Suffix array of `s` over ranks 0..upper. Linear time (SA-IS).
std::vector<std::uint32_t> suffix_array(std::span<const Rank> s, Rank upper);

// Kasai's algorithm: lcp[r] = LCP(suffix sa[r-1], suffix sa[r]), lcp[0] = 0.
std::vector<std::uint32_t> lcp_array(std::span<const Rank> s,
                                     std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> rank);

// Constant-time range minimum over a fixed array. Values are split into
// 64-element blocks; a sparse table covers whole blocks and per-position
// stack bitmasks answer the partial blocks at the ends.
class RangeMin {
 public:
  RangeMin() = default;
  explicit RangeMin(std::vector<std::uint32_t> values);

  // Minimum of values[lo..hi], inclusive. Requires lo <= hi < size().
  std::uint32_t query(std::size_t lo, std::size_t hi) const;

  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::uint32_t in_block(std::size_t lo, std::size_t hi) const;

  std::vector<std::uint32_t> values_;
  std::vector<std::uint64_t> stack_masks_;
  // block_min_[level][b] = min over blocks b .. b + 2^level - 1.
  std::vector<std::vector<std::uint32_t>> block_min_;
};

// Longest-common-extension index over a SolidSequence. lce(i, j) is the
// string depth of the lowest common ancestor of suffixes i and j in the
// suffix tree, computed here from the suffix array and LCP array.
class LceIndex {
 public:
  explicit LceIndex(SolidSequence seq);

  // Length of the longest common prefix of the suffixes starting at 0-based
  // offsets i and j. Throws Error(OutOfRange) if either offset is >= size().
  std::size_t lce(std::size_t i, std::size_t j) const;

  std::size_t size() const noexcept { return seq_.size(); }
  const SolidSequence& sequence() const noexcept { return seq_; }
  std::span<const std::uint32_t> suffix_order() const noexcept { return sa_; }
  std::span<const std::uint32_t> inverse_rank() const noexcept { return rank_; }
  std::span<const std::uint32_t> lcp() const noexcept { return lcp_; }

  // One line per suffix rank: "rank<TAB>offset<TAB>lcp".
  void dump(std::ostream& out) const;

 private:
  SolidSequence seq_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> lcp_;
  RangeMin rmq_;
};

}  // namespace degen
