#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace degen::bench {

struct GridSpec {
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
  std::size_t m = 64;
  std::size_t sigma = 4;
  std::size_t reps = 5;
  std::uint64_t seed = 20170101;
};

// "n=32768,65536,k=1,2,4,sigma=4,reps=5[,m=64][,seed=7]". A bare number
// extends the list of the most recent key. Throws Error(InvalidArgument).
GridSpec parse_grid(std::string_view spec);

struct Cell {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t sigma = 0;
  std::size_t reps = 0;
  double build_median_ms = 0;   // substitution, index, membership table
  double search_median_ms = 0;  // kangaroo search + filter
  std::uint64_t lce_queries = 0;
  std::uint64_t query_bound = 0;  // (k+1)(n-m+1)
  std::size_t occurrences = 0;

  bool within_query_bound() const noexcept { return lce_queries <= query_bound; }
};

struct ScalingReport {
  std::vector<Cell> cells;
};

// One generated instance per (n, k) cell with a solid text and k non-solid
// pattern symbols, timed `reps` times after one warm-up run. Throws
// Error(InvalidArgument) for reps < 5 or a cell that violates the instance
// invariants (e.g. m > n, k > m).
ScalingReport run_scaling(const GridSpec& grid);

void write_tsv(const ScalingReport& report, std::ostream& out);

struct DoublingRatio {
  std::string axis;        // "n" or "k"
  std::size_t fixed = 0;   // value of the other axis
  std::size_t from = 0;
  std::size_t to = 0;
  double ratio = 0;        // search median at `to` over search median at `from`
};

// Search-time ratios for every pair of cells whose n (at equal k) or k (at
// equal n) differ by exactly a factor of two.
std::vector<DoublingRatio> doubling_ratios(const ScalingReport& report);

}  // namespace degen::bench
