#include "degen/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "degen/error.hpp"

namespace degen::oracle {

std::vector<std::size_t> naive_match(const DegenerateString& pattern,
                                     const DegenerateString& text) {
  if (pattern.empty()) {
    throw Error(Errc::EmptyPattern, "pattern must contain at least one symbol");
  }
  std::vector<std::size_t> out;
  if (pattern.size() > text.size()) return out;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    bool ok = true;
    for (std::size_t p = 0; p < pattern.size() && ok; ++p) {
      ok = symbols_match(pattern[p], text[i + p]);
    }
    if (ok) out.push_back(i + 1);
  }
  return out;
}

namespace {
constexpr std::string_view kInstanceSymbols =
    "abcdefghijklmnopqrstuvwxyz0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
}

void validate(const RandomInstanceSpec& spec) {
  auto fail = [](const std::string& what) {
    throw Error(Errc::InvalidArgument, "invalid instance spec: " + what);
  };
  if (spec.m > spec.n) fail("m > n");
  if (spec.k_pattern > spec.m) fail("k_pattern > m");
  if (spec.k_text > spec.n) fail("k_text > n");
  if (spec.sigma > kInstanceSymbols.size()) fail("sigma too large");
  if (spec.max_set_size < 2 || spec.max_set_size > spec.sigma) {
    fail("max_set_size must lie in 2..sigma");
  }
}

Alphabet instance_alphabet(std::size_t sigma) {
  return Alphabet(kInstanceSymbols.substr(0, sigma));
}

namespace {

using Engine = std::mt19937_64;

std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

DegenerateSymbol random_set(Engine& rng, std::size_t sigma, std::size_t max_size) {
  const auto size = uniform(rng, 2, max_size);
  std::vector<std::size_t> ranks(sigma);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  ranks.resize(size);
  return DegenerateSymbol::of(ranks);
}

std::vector<DegenerateSymbol> random_string(Engine& rng, std::size_t length,
                                            std::size_t k, std::size_t sigma,
                                            std::size_t max_size) {
  std::vector<DegenerateSymbol> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(DegenerateSymbol::solid(uniform(rng, 0, sigma - 1)));
  }
  std::vector<std::size_t> offsets(length);
  std::iota(offsets.begin(), offsets.end(), 0);
  std::shuffle(offsets.begin(), offsets.end(), rng);
  for (std::size_t t = 0; t < k; ++t) {
    out[offsets[t]] = random_set(rng, sigma, max_size);
  }
  return out;
}

// Makes `text` intersect `pat` while keeping its cardinality.
DegenerateSymbol force_match(Engine& rng, const DegenerateSymbol& pat,
                             const DegenerateSymbol& text) {
  if (symbols_match(pat, text)) return text;
  const auto choices = pat.members();
  const auto wanted = choices[uniform(rng, 0, choices.size() - 1)];
  if (text.is_solid()) return DegenerateSymbol::solid(wanted);
  auto members = text.members();
  members[uniform(rng, 0, members.size() - 1)] = wanted;
  return DegenerateSymbol::of(members);
}

}  // namespace

Instance generate_instance(const RandomInstanceSpec& spec) {
  validate(spec);
  Engine rng(spec.seed);
  auto pattern = random_string(rng, spec.m, spec.k_pattern, spec.sigma, spec.max_set_size);
  auto text = random_string(rng, spec.n, spec.k_text, spec.sigma, spec.max_set_size);

  Instance out;
  if (spec.m > 0 && uniform(rng, 0, 1) == 1) {
    const auto at = uniform(rng, 0, spec.n - spec.m);
    for (std::size_t p = 0; p < spec.m; ++p) {
      text[at + p] = force_match(rng, pattern[p], text[at + p]);
    }
    out.planted = true;
    out.planted_at = at + 1;
  }
  out.pattern = DegenerateString(std::move(pattern));
  out.text = DegenerateString(std::move(text));
  return out;
}

RandomInstanceSpec shrink(RandomInstanceSpec spec,
                          const std::function<bool(const RandomInstanceSpec&)>& fails) {
  while (spec.m > 1) {
    auto next = spec;
    next.n = std::max<std::size_t>(1, spec.n / 2);
    next.m = std::max<std::size_t>(1, std::min(spec.m / 2, next.n));
    next.k_pattern = std::min(next.k_pattern, next.m);
    next.k_text = std::min(next.k_text, next.n);
    if (!fails(next)) break;
    spec = next;
  }
  return spec;
}

}  // namespace degen::oracle
