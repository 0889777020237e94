#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "degen/alphabet.hpp"
#include "degen/degenerate_string.hpp"
#include "degen/lce.hpp"

namespace degen {

// A degenerate string made solid: every non-solid symbol is replaced by a
// fresh λ symbol that matches nothing. Base symbols keep their alphabet rank
// 0..σ-1; λ number t (1-based) gets rank σ + t - 1.
struct LambdaString {
  std::vector<Rank> ranks;
  // 1-based positions of the λ symbols, increasing.
  std::vector<std::size_t> lambda_positions;
  // Original set behind each λ, parallel to lambda_positions.
  std::vector<DegenerateSymbol> original_sets;
  // λ number of lambda_positions[0]; later ones are numbered consecutively.
  std::size_t first_lambda = 1;
  std::size_t alphabet_size = 0;

  std::size_t size() const noexcept { return ranks.size(); }
  std::size_t k() const noexcept { return lambda_positions.size(); }
  bool is_lambda_rank(Rank r) const noexcept { return r >= alphabet_size; }
};
using LambdaPattern = LambdaString;

// Replaces the t-th non-solid symbol of `s` (left to right) by λ number
// first_lambda + t - 1. Text and pattern use disjoint λ numbers so that no
// two λs ever compare equal.
LambdaString substitute(const DegenerateString& s, const Alphabet& alphabet,
                        std::size_t first_lambda = 1);

// Pre[t, a]: whether base symbol a belongs to the set behind the pattern's
// t-th λ. k × σ entries, so each λ-position check is a single lookup.
class MembershipTable {
 public:
  MembershipTable(const LambdaPattern& pattern, const Alphabet& alphabet);

  // t is the 1-based λ number relative to the pattern.
  bool contains(std::size_t t, Rank a) const {
    return bits_[(t - 1) * sigma_ + a] != 0;
  }
  std::size_t lambdas() const noexcept { return k_; }
  std::size_t alphabet_size() const noexcept { return sigma_; }

 private:
  std::size_t k_;
  std::size_t sigma_;
  std::vector<std::uint8_t> bits_;
};

// Mismatch[i, j]: 1-based pattern position of the j-th mismatch of alignment
// i (0-based, text window i+1 .. i+m), or the sentinel m+1 once the pattern
// has been matched through to its end.
class MismatchTable {
 public:
  MismatchTable() = default;
  // Every entry starts as the sentinel.
  MismatchTable(std::size_t alignments, std::size_t depth,
                std::size_t pattern_length);
  // Entries start indeterminate; each one must be set before it is read.
  static MismatchTable for_overwrite(std::size_t alignments, std::size_t depth,
                                     std::size_t pattern_length);

  std::size_t at(std::size_t i, std::size_t j) const {
    return entries_[i * depth_ + (j - 1)];
  }
  void set(std::size_t i, std::size_t j, std::size_t value) {
    entries_[i * depth_ + (j - 1)] = static_cast<std::uint32_t>(value);
  }
  // The depth() entries of alignment i.
  std::span<const std::uint32_t> column(std::size_t i) const {
    return {entries_.get() + i * depth_, depth_};
  }

  std::size_t alignments() const noexcept { return alignments_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t sentinel() const noexcept { return sentinel_; }

 private:
  std::size_t alignments_ = 0;
  std::size_t depth_ = 0;
  std::size_t sentinel_ = 1;
  std::unique_ptr<std::uint32_t[]> entries_;
};

struct KangarooResult {
  // Full table; empty (no alignments) when the search ran without keeping it.
  MismatchTable mismatches;
  // 0-based alignments that mismatch only at λ positions.
  std::vector<std::size_t> approximate;
  // The `depth` entries of each approximate occurrence, concatenated in the
  // order of `approximate`. Filled in both modes.
  std::vector<std::uint32_t> approximate_columns;
  std::size_t depth = 0;
  std::size_t sentinel = 1;
  std::uint64_t lce_queries = 0;

  std::span<const std::uint32_t> approximate_column(std::size_t t) const {
    return std::span<const std::uint32_t>(approximate_columns).subspan(t * depth, depth);
  }
};

// LCE index over text · pattern · separator, with the separator ranked above
// every base and λ symbol.
LceIndex build_search_index(std::span<const Rank> text,
                            const LambdaPattern& pattern);

enum class TableMode { Keep, Discard };

// k-mismatch search by repeated LCE jumps, with at most one LCE query per
// recorded mismatch. Each alignment records depth = pattern.k() + (λs in the
// whole text) + 1 mismatch positions. Alignment i is an approximate
// occurrence iff it mismatches nowhere except at the λs of the pattern and of
// the text window t[i+1 .. i+m]; for a solid text this is the plain
// "Mismatch[i, k+1] = m+1" test. TableMode::Discard keeps only the columns of
// approximate occurrences. A pattern longer than the text yields an empty
// result. Throws Error(InvalidArgument) if `index` was not built over
// exactly text · pattern · separator.
KangarooResult kangaroo_search(const LambdaPattern& pattern,
                               std::span<const Rank> text,
                               const LceIndex& index,
                               TableMode mode = TableMode::Keep);

enum class Verdict : std::uint8_t { Fake, Real };

struct MismatchVerdict {
  std::size_t position;  // 1-based pattern position
  Verdict verdict;

  bool operator==(const MismatchVerdict&) const = default;
};

struct MatchReport {
  // 1-based text positions where the pattern occurs, increasing.
  std::vector<std::size_t> exact_occurrences;
  // 0-based alignments that survived the k-mismatch search, increasing.
  std::vector<std::size_t> approximate_occurrences;
  // Per approximate occurrence, the verdict of every mismatch. Only filled
  // when diagnostics are requested.
  std::vector<std::vector<MismatchVerdict>> verdicts;
  std::size_t mismatch_budget = 0;
  std::uint64_t lce_queries = 0;

  bool operator==(const MatchReport&) const = default;
};

// Solid-text filter: classifies every λ position of each approximate
// occurrence as Fake (the text symbol is in the original set) or Real.
// Alignments with only Fake verdicts become exact occurrences i+1. Without
// diagnostics the scan of an alignment stops at its first Real verdict.
MatchReport filter(const LambdaPattern& pattern, std::span<const Rank> text,
                   std::span<const std::size_t> approximate,
                   const MembershipTable& membership, bool diagnostics = false);

// Degenerate-text filter: every recorded mismatch of an approximate
// occurrence is judged by intersecting the original pattern and text sets.
MatchReport filter_degenerate(const DegenerateString& pattern,
                              const DegenerateString& text,
                              const KangarooResult& search,
                              bool diagnostics = false);

struct FindOptions {
  bool diagnostics = false;
};

// All 1-based positions where `pattern` occurs in `text`. A solid text runs
// substitute → kangaroo search → membership filter. Non-solid text symbols
// are substituted too, with λ numbers after the pattern's, and the filter
// intersects the original sets. Throws Error(EmptyPattern).
MatchReport find_occurrences(const DegenerateString& pattern,
                             const DegenerateString& text,
                             const Alphabet& alphabet,
                             const FindOptions& options = {});

}  // namespace degen
