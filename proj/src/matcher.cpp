#include "degen/matcher.hpp"

#include <algorithm>
#include <string>

#include "degen/error.hpp"

namespace degen {

LambdaString substitute(const DegenerateString& s, const Alphabet& alphabet,
                        std::size_t first_lambda) {
  LambdaString out;
  out.first_lambda = first_lambda;
  out.alphabet_size = alphabet.size();
  out.ranks.reserve(s.size());
  const auto sigma = static_cast<Rank>(alphabet.size());
  for (std::size_t off = 0; off < s.size(); ++off) {
    const auto& sym = s[off];
    if (sym.is_solid()) {
      const auto r = sym.first();
      if (r >= alphabet.size()) {
        throw Error(Errc::InvalidArgument,
                    "symbol at position " + std::to_string(off + 1) +
                        " is outside the alphabet");
      }
      out.ranks.push_back(static_cast<Rank>(r));
      continue;
    }
    const auto lambda = first_lambda + out.lambda_positions.size();
    out.ranks.push_back(sigma + static_cast<Rank>(lambda - 1));
    out.lambda_positions.push_back(off + 1);
    out.original_sets.push_back(sym);
  }
  return out;
}

MembershipTable::MembershipTable(const LambdaPattern& pattern,
                                 const Alphabet& alphabet)
    : k_(pattern.k()), sigma_(alphabet.size()), bits_(k_ * sigma_, 0) {
  for (std::size_t t = 0; t < k_; ++t) {
    for (std::size_t a = 0; a < sigma_; ++a) {
      bits_[t * sigma_ + a] = pattern.original_sets[t].contains(a) ? 1 : 0;
    }
  }
}

MismatchTable::MismatchTable(std::size_t alignments, std::size_t depth,
                             std::size_t pattern_length)
    : MismatchTable(for_overwrite(alignments, depth, pattern_length)) {
  std::fill_n(entries_.get(), alignments_ * depth_,
              static_cast<std::uint32_t>(sentinel_));
}

MismatchTable MismatchTable::for_overwrite(std::size_t alignments,
                                           std::size_t depth,
                                           std::size_t pattern_length) {
  MismatchTable t;
  t.alignments_ = alignments;
  t.depth_ = depth;
  t.sentinel_ = pattern_length + 1;
  t.entries_ = std::make_unique_for_overwrite<std::uint32_t[]>(alignments * depth);
  return t;
}

LceIndex build_search_index(std::span<const Rank> text,
                            const LambdaPattern& pattern) {
  Rank separator = static_cast<Rank>(pattern.alphabet_size);
  std::vector<Rank> data;
  data.reserve(text.size() + pattern.size() + 1);
  for (auto r : text) {
    separator = std::max(separator, r + 1);
    data.push_back(r);
  }
  for (auto r : pattern.ranks) {
    separator = std::max(separator, r + 1);
    data.push_back(r);
  }
  data.push_back(separator);
  return LceIndex(SolidSequence(std::move(data), separator));
}

KangarooResult kangaroo_search(const LambdaPattern& pattern,
                               std::span<const Rank> text,
                               const LceIndex& index, TableMode mode) {
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  const auto is_text_lambda = [&](Rank r) { return r >= pattern.alphabet_size; };
  const auto text_lambdas =
      static_cast<std::size_t>(std::count_if(text.begin(), text.end(), is_text_lambda));
  const std::size_t depth = pattern.k() + text_lambdas + 1;
  const std::size_t sentinel = m + 1;

  KangarooResult result;
  result.depth = depth;
  result.sentinel = sentinel;
  if (m > n) {
    result.mismatches = MismatchTable(0, depth, m);
    return result;
  }
  if (index.size() != n + m + 1) {
    throw Error(Errc::InvalidArgument,
                "index length " + std::to_string(index.size()) +
                    " does not match text + pattern + separator (" +
                    std::to_string(n + m + 1) + ")");
  }

  const std::size_t alignments = n - m + 1;
  const bool keep = mode == TableMode::Keep;
  result.mismatches = MismatchTable::for_overwrite(keep ? alignments : 0, depth, m);
  std::vector<std::uint32_t> column(depth);
  for (std::size_t i = 0; i < alignments; ++i) {
    std::size_t f = 0;
    std::size_t j = 0;
    for (; j < depth && f < m; ++j) {
      // Pattern suffix f+1.. against text suffix i+f+1.. (both 1-based).
      const std::size_t q = std::min(index.lce(i + f, n + f), m - f);
      ++result.lce_queries;
      f = f + q + 1;
      column[j] = static_cast<std::uint32_t>(f);
    }
    // Once f reaches m (a mismatch at the last position) or the sentinel,
    // every later entry is the sentinel.
    std::fill(column.begin() + static_cast<std::ptrdiff_t>(j), column.end(),
              static_cast<std::uint32_t>(sentinel));
    if (keep) {
      for (std::size_t jj = 0; jj < depth; ++jj) result.mismatches.set(i, jj + 1, column[jj]);
    }

    // Every λ in the window is a guaranteed mismatch, so the alignment is an
    // approximate occurrence iff it has no mismatch anywhere else. The depth
    // exceeds the number of λs in any window, so such a column always reaches
    // the sentinel.
    if (column.back() != sentinel) continue;
    const bool only_lambdas = std::all_of(column.begin(), column.end(), [&](auto e) {
      return e == sentinel || pattern.is_lambda_rank(pattern.ranks[e - 1]) ||
             is_text_lambda(text[i + e - 1]);
    });
    if (only_lambdas) {
      result.approximate.push_back(i);
      result.approximate_columns.insert(result.approximate_columns.end(),
                                        column.begin(), column.end());
    }
  }
  return result;
}

MatchReport filter(const LambdaPattern& pattern, std::span<const Rank> text,
                   std::span<const std::size_t> approximate,
                   const MembershipTable& membership, bool diagnostics) {
  if (membership.lambdas() != pattern.k()) {
    throw Error(Errc::InvalidArgument,
                "membership table does not belong to this pattern");
  }
  MatchReport report;
  report.mismatch_budget = pattern.k();
  report.approximate_occurrences.assign(approximate.begin(), approximate.end());
  if (diagnostics) report.verdicts.reserve(approximate.size());

  for (const auto i : approximate) {
    if (i + pattern.size() > text.size()) {
      throw Error(Errc::OutOfRange,
                  "alignment " + std::to_string(i) + " runs past the text");
    }
    bool all_fake = true;
    std::vector<MismatchVerdict> verdicts;
    for (std::size_t t = 0; t < pattern.k(); ++t) {
      const auto e = pattern.lambda_positions[t];
      const Rank c = text[i + e - 1];
      const bool fake = c < membership.alphabet_size() && membership.contains(t + 1, c);
      if (diagnostics) {
        verdicts.push_back({e, fake ? Verdict::Fake : Verdict::Real});
      }
      if (!fake) {
        all_fake = false;
        if (!diagnostics) break;
      }
    }
    if (all_fake) report.exact_occurrences.push_back(i + 1);
    if (diagnostics) report.verdicts.push_back(std::move(verdicts));
  }
  return report;
}

MatchReport filter_degenerate(const DegenerateString& pattern,
                              const DegenerateString& text,
                              const KangarooResult& search, bool diagnostics) {
  MatchReport report;
  report.mismatch_budget = search.depth == 0 ? 0 : search.depth - 1;
  report.approximate_occurrences = search.approximate;
  report.lce_queries = search.lce_queries;
  if (diagnostics) report.verdicts.reserve(search.approximate.size());

  for (std::size_t t = 0; t < search.approximate.size(); ++t) {
    const auto i = search.approximate[t];
    bool all_fake = true;
    std::vector<MismatchVerdict> verdicts;
    for (const auto e : search.approximate_column(t)) {
      if (e == search.sentinel) break;
      const bool fake = symbols_match(pattern[e - 1], text[i + e - 1]);
      if (diagnostics) {
        verdicts.push_back({e, fake ? Verdict::Fake : Verdict::Real});
      }
      if (!fake) {
        all_fake = false;
        if (!diagnostics) break;
      }
    }
    if (all_fake) report.exact_occurrences.push_back(i + 1);
    if (diagnostics) report.verdicts.push_back(std::move(verdicts));
  }
  return report;
}

MatchReport find_occurrences(const DegenerateString& pattern,
                             const DegenerateString& text,
                             const Alphabet& alphabet,
                             const FindOptions& options) {
  if (pattern.empty()) {
    throw Error(Errc::EmptyPattern, "pattern must contain at least one symbol");
  }
  const auto lp = substitute(pattern, alphabet);
  if (pattern.size() > text.size()) {
    MatchReport report;
    report.mismatch_budget = lp.k() + text.non_solid_count();
    return report;
  }

  if (text.is_solid()) {
    const auto lt = substitute(text, alphabet);
    const auto index = build_search_index(lt.ranks, lp);
    const auto search = kangaroo_search(lp, lt.ranks, index, TableMode::Discard);
    const MembershipTable membership(lp, alphabet);
    auto report = filter(lp, lt.ranks, search.approximate, membership,
                         options.diagnostics);
    report.lce_queries = search.lce_queries;
    return report;
  }

  const auto lt = substitute(text, alphabet, lp.k() + 1);
  const auto index = build_search_index(lt.ranks, lp);
  const auto search = kangaroo_search(lp, lt.ranks, index, TableMode::Discard);
  return filter_degenerate(pattern, text, search, options.diagnostics);
}

}  // namespace degen
