#include "degen/lce.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>

#include "degen/error.hpp"

namespace degen {

SolidSequence::SolidSequence(std::vector<Rank> data, Rank separator)
    : data_(std::move(data)), separator_(separator) {
  if (data_.empty() || data_.back() != separator_) {
    throw Error(Errc::MissingSeparator,
                "sequence must end with the separator rank " +
                    std::to_string(separator_));
  }
  for (std::size_t i = 0; i + 1 < data_.size(); ++i) {
    if (data_[i] == separator_) {
      throw Error(Errc::SeparatorNotUnique,
                  "separator also occurs at offset " + std::to_string(i));
    }
    if (data_[i] > separator_) {
      throw Error(Errc::InvalidArgument,
                  "rank " + std::to_string(data_[i]) + " at offset " +
                      std::to_string(i) + " exceeds the separator rank");
    }
  }
}

namespace {

// SA-IS over s[0..n) with every value in [0, upper].
std::vector<int> sa_is(const std::vector<int>& s, int upper) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<int>{0, 1} : std::vector<int>{1, 0};

  std::vector<int> sa(n);
  // is_s[i]: suffix i is S-type (smaller than suffix i+1).
  std::vector<char> is_s(n, 0);
  for (int i = n - 2; i >= 0; --i) {
    is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : (s[i] < s[i + 1]);
  }

  // Bucket boundaries: sum_l[c] is where the L-type run of bucket c starts,
  // sum_s[c] is where its S-type run starts.
  std::vector<int> sum_l(upper + 1, 0), sum_s(upper + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (!is_s[i]) {
      ++sum_s[s[i]];
    } else {
      // An S-type suffix never starts with `upper`, so s[i] + 1 <= upper.
      ++sum_l[s[i] + 1];
    }
  }
  for (int c = 0; c <= upper; ++c) {
    sum_s[c] += sum_l[c];
    if (c < upper) sum_l[c + 1] += sum_s[c];
  }

  auto induce = [&](const std::vector<int>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<int> buf(sum_s);
    for (int d : lms) {
      if (d == n) continue;
      sa[buf[s[d]]++] = d;
    }
    buf = sum_l;
    sa[buf[s[n - 1]]++] = n - 1;
    for (int i = 0; i < n; ++i) {
      const int v = sa[i];
      if (v >= 1 && !is_s[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
    }
    buf = sum_l;
    for (int i = n - 1; i >= 0; --i) {
      const int v = sa[i];
      if (v >= 1 && is_s[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<int> lms_index(n + 1, -1);
  std::vector<int> lms;
  for (int i = 1; i < n; ++i) {
    if (!is_s[i - 1] && is_s[i]) {
      lms_index[i] = static_cast<int>(lms.size());
      lms.push_back(i);
    }
  }
  const int m = static_cast<int>(lms.size());

  induce(lms);

  if (m > 0) {
    std::vector<int> sorted_lms;
    sorted_lms.reserve(m);
    for (int v : sa) {
      if (lms_index[v] != -1) sorted_lms.push_back(v);
    }
    // Name LMS substrings; equal substrings share a name.
    std::vector<int> reduced(m);
    int names = 0;
    reduced[lms_index[sorted_lms[0]]] = 0;
    for (int i = 1; i < m; ++i) {
      int l = sorted_lms[i - 1];
      int r = sorted_lms[i];
      const int end_l = lms_index[l] + 1 < m ? lms[lms_index[l] + 1] : n;
      const int end_r = lms_index[r] + 1 < m ? lms[lms_index[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l && s[l] == s[r]) {
          ++l;
          ++r;
        }
        if (l == n || s[l] != s[r]) same = false;
      }
      if (!same) ++names;
      reduced[lms_index[sorted_lms[i]]] = names;
    }
    const auto reduced_sa = sa_is(reduced, names);
    for (int i = 0; i < m; ++i) sorted_lms[i] = lms[reduced_sa[i]];
    induce(sorted_lms);
  }
  return sa;
}

}  // namespace

std::vector<std::uint32_t> suffix_array(std::span<const Rank> s, Rank upper) {
  std::vector<int> values(s.begin(), s.end());
  const auto sa = sa_is(values, static_cast<int>(upper));
  return {sa.begin(), sa.end()};
}

std::vector<std::uint32_t> lcp_array(std::span<const Rank> s,
                                     std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> rank) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (h > 0) --h;
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
  }
  return lcp;
}

namespace {
constexpr std::size_t kBlock = 64;
constexpr std::size_t kDirectCompare = 8;
}

RangeMin::RangeMin(std::vector<std::uint32_t> values)
    : values_(std::move(values)), stack_masks_(values_.size()) {
  const std::size_t n = values_.size();
  const std::size_t blocks = (n + kBlock - 1) / kBlock;

  std::vector<std::uint32_t> level0(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t start = b * kBlock;
    const std::size_t stop = std::min(n, start + kBlock);
    std::uint64_t mask = 0;
    for (std::size_t i = start; i < stop; ++i) {
      while (mask != 0) {
        const std::size_t top = start + 63 - std::countl_zero(mask);
        if (values_[top] < values_[i]) break;
        mask &= ~(std::uint64_t{1} << (top - start));
      }
      mask |= std::uint64_t{1} << (i - start);
      stack_masks_[i] = mask;
    }
    level0[b] = *std::min_element(values_.begin() + start, values_.begin() + stop);
  }

  block_min_.push_back(std::move(level0));
  for (std::size_t width = 2; width <= blocks; width *= 2) {
    const auto& prev = block_min_.back();
    std::vector<std::uint32_t> next(blocks - width + 1);
    for (std::size_t b = 0; b < next.size(); ++b) {
      next[b] = std::min(prev[b], prev[b + width / 2]);
    }
    block_min_.push_back(std::move(next));
  }
}

std::uint32_t RangeMin::in_block(std::size_t lo, std::size_t hi) const {
  const std::size_t start = lo - lo % kBlock;
  const std::uint64_t mask = stack_masks_[hi] & (~std::uint64_t{0} << (lo - start));
  return values_[start + static_cast<std::size_t>(std::countr_zero(mask))];
}

std::uint32_t RangeMin::query(std::size_t lo, std::size_t hi) const {
  const std::size_t bl = lo / kBlock;
  const std::size_t bh = hi / kBlock;
  if (bl == bh) return in_block(lo, hi);

  std::uint32_t best = std::min(in_block(lo, bl * kBlock + kBlock - 1),
                                in_block(bh * kBlock, hi));
  if (bl + 1 < bh) {
    const std::size_t count = bh - bl - 1;
    const auto level = static_cast<std::size_t>(std::bit_width(count) - 1);
    const auto& row = block_min_[level];
    best = std::min({best, row[bl + 1], row[bh - (std::size_t{1} << level)]});
  }
  return best;
}

LceIndex::LceIndex(SolidSequence seq) : seq_(std::move(seq)) {
  sa_ = suffix_array(seq_.data(), seq_.separator());
  rank_.resize(sa_.size());
  for (std::size_t r = 0; r < sa_.size(); ++r) rank_[sa_[r]] = static_cast<std::uint32_t>(r);
  lcp_ = lcp_array(seq_.data(), sa_, rank_);
  rmq_ = RangeMin(lcp_);
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) const {
  const std::size_t n = seq_.size();
  if (i >= n || j >= n) {
    throw Error(Errc::OutOfRange, "lce offsets (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") out of range for length " +
                                      std::to_string(n));
  }
  if (i == j) return n - i;
  // Most extensions are short: settle them by direct comparison of
  // neighbouring symbols before touching the rank and LCP arrays.
  const auto data = seq_.data();
  const std::size_t scan = std::min({kDirectCompare, n - i, n - j});
  for (std::size_t q = 0; q < scan; ++q) {
    if (data[i + q] != data[j + q]) return q;
  }
  auto ri = rank_[i];
  auto rj = rank_[j];
  if (ri > rj) std::swap(ri, rj);
  return rmq_.query(ri + 1, rj);
}

void LceIndex::dump(std::ostream& out) const {
  for (std::size_t r = 0; r < sa_.size(); ++r) {
    out << r << '\t' << sa_[r] << '\t' << lcp_[r] << '\n';
  }
}

}  // namespace degen
