#include "degen/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>

#include "degen/error.hpp"
#include "degen/matcher.hpp"
#include "degen/oracle.hpp"

namespace degen::bench {

namespace {

std::size_t parse_number(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw Error(Errc::InvalidArgument,
                "bench spec: expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const auto mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

using Clock = std::chrono::steady_clock;

constexpr double kMinSampleMs = 50.0;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

GridSpec parse_grid(std::string_view spec) {
  GridSpec grid;
  std::string key;
  grid.n.clear();
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    auto token = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (token.empty()) continue;

    const auto eq = token.find('=');
    if (eq != std::string_view::npos) {
      key = std::string(token.substr(0, eq));
      token = token.substr(eq + 1);
    } else if (key != "n" && key != "k") {
      throw Error(Errc::InvalidArgument,
                  "bench spec: value '" + std::string(token) + "' has no key");
    }
    const auto value = parse_number(token);
    if (key == "n") grid.n.push_back(value);
    else if (key == "k") grid.k.push_back(value);
    else if (key == "m") grid.m = value;
    else if (key == "sigma") grid.sigma = value;
    else if (key == "reps") grid.reps = value;
    else if (key == "seed") grid.seed = value;
    else throw Error(Errc::InvalidArgument, "bench spec: unknown key '" + key + "'");
  }
  if (grid.n.empty() || grid.k.empty()) {
    throw Error(Errc::InvalidArgument, "bench spec needs n=<list> and k=<list>");
  }
  return grid;
}

namespace {

struct Prepared {
  Cell cell;
  Alphabet alphabet;
  oracle::Instance instance;
  LambdaPattern pattern;
  LambdaString text;
  LceIndex index;
  MembershipTable membership;
  std::size_t batch = 1;
  std::vector<double> build_ms;
  std::vector<double> search_ms;

  void search_once() {
    const auto search = kangaroo_search(pattern, text.ranks, index, TableMode::Discard);
    const auto result = filter(pattern, text.ranks, search.approximate, membership);
    cell.lce_queries = search.lce_queries;
    cell.occurrences = result.exact_occurrences.size();
  }
};

Prepared prepare(const GridSpec& grid, std::size_t n, std::size_t k) {
  oracle::RandomInstanceSpec spec;
  spec.n = n;
  spec.m = std::min(grid.m, n);
  spec.sigma = grid.sigma;
  spec.k_pattern = k;
  spec.k_text = 0;
  spec.max_set_size = 2;
  // The pattern is drawn first, so every n of one k row shares a pattern.
  spec.seed = grid.seed ^ (k * 0x9E3779B97F4A7C15ull);
  auto inst = oracle::generate_instance(spec);
  auto alphabet = oracle::instance_alphabet(grid.sigma);
  auto lp = substitute(inst.pattern, alphabet);
  auto lt = substitute(inst.text, alphabet);
  auto index = build_search_index(lt.ranks, lp);
  MembershipTable membership(lp, alphabet);

  Cell cell;
  cell.n = n;
  cell.m = spec.m;
  cell.k = k;
  cell.sigma = grid.sigma;
  cell.reps = grid.reps;
  cell.query_bound = static_cast<std::uint64_t>(k + 1) * (n - spec.m + 1);
  return Prepared{cell,          std::move(alphabet), std::move(inst),
                  std::move(lp), std::move(lt),       std::move(index),
                  std::move(membership), 1, {}, {}};
}

}  // namespace

ScalingReport run_scaling(const GridSpec& grid) {
  if (grid.reps < 5) {
    throw Error(Errc::InvalidArgument, "bench needs at least 5 repetitions");
  }
  std::vector<Prepared> cells;
  for (const auto k : grid.k) {
    for (const auto n : grid.n) {
      cells.push_back(prepare(grid, n, k));
      auto& c = cells.back();
      // Warm-up run, which also sizes the batch so that one timed sample of
      // a small cell spans at least kMinSampleMs.
      const auto t0 = Clock::now();
      c.search_once();
      const double warm = elapsed_ms(t0);
      c.batch = static_cast<std::size_t>(
          std::max(1.0, std::ceil(kMinSampleMs / std::max(warm, 1e-3))));
    }
  }

  // Repetitions sweep the whole grid in a fresh order each time, so a slow
  // stretch of the machine lands on one sample of many cells instead of
  // every sample of one cell.
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 shuffler(grid.seed);
  for (std::size_t rep = 0; rep < grid.reps; ++rep) {
    std::shuffle(order.begin(), order.end(), shuffler);
    for (const auto idx : order) {
      auto& c = cells[idx];
      auto t0 = Clock::now();
      {
        const auto p = substitute(c.instance.pattern, c.alphabet);
        const auto t = substitute(c.instance.text, c.alphabet);
        const auto built = build_search_index(t.ranks, p);
        const MembershipTable pre(p, c.alphabet);
      }
      c.build_ms.push_back(elapsed_ms(t0));

      t0 = Clock::now();
      for (std::size_t b = 0; b < c.batch; ++b) c.search_once();
      c.search_ms.push_back(elapsed_ms(t0) / static_cast<double>(c.batch));
    }
  }

  ScalingReport report;
  for (auto& c : cells) {
    c.cell.build_median_ms = median(c.build_ms);
    c.cell.search_median_ms = median(c.search_ms);
    report.cells.push_back(c.cell);
  }
  return report;
}

void write_tsv(const ScalingReport& report, std::ostream& out) {
  out << "n\tm\tk\tsigma\treps\tbuild_median_ms\tsearch_median_ms\t"
         "lce_queries\tquery_bound\toccurrences\n";
  const auto flags = out.flags();
  out << std::fixed << std::setprecision(4);
  for (const auto& c : report.cells) {
    out << c.n << '\t' << c.m << '\t' << c.k << '\t' << c.sigma << '\t'
        << c.reps << '\t' << c.build_median_ms << '\t' << c.search_median_ms
        << '\t' << c.lce_queries << '\t' << c.query_bound << '\t'
        << c.occurrences << '\n';
  }
  out.flags(flags);
}

std::vector<DoublingRatio> doubling_ratios(const ScalingReport& report) {
  std::vector<DoublingRatio> out;
  for (const auto& a : report.cells) {
    for (const auto& b : report.cells) {
      if (a.k == b.k && b.n == 2 * a.n) {
        out.push_back({"n", a.k, a.n, b.n, b.search_median_ms / a.search_median_ms});
      }
      if (a.n == b.n && b.k == 2 * a.k) {
        out.push_back({"k", a.n, a.k, b.k, b.search_median_ms / a.search_median_ms});
      }
    }
  }
  return out;
}

}  // namespace degen::bench
