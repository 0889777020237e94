#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/alphabet.hpp"
#include "degen/degenerate_string.hpp"

namespace degen::oracle {

// Name of the generator behind generate_instance, printed with failing seeds.
inline constexpr std::string_view kGeneratorName = "std::mt19937_64";

// Brute force: every alignment, every offset, one set intersection each.
// Returns 1-based positions. Throws Error(EmptyPattern).
std::vector<std::size_t> naive_match(const DegenerateString& pattern,
                                     const DegenerateString& text);

struct RandomInstanceSpec {
  std::size_t n = 0;  // text length
  std::size_t m = 0;  // pattern length
  std::size_t sigma = 2;
  std::size_t k_pattern = 0;
  std::size_t k_text = 0;
  std::size_t max_set_size = 2;
  std::uint64_t seed = 0;
};

// Throws Error(InvalidArgument) unless m <= n, k_pattern <= m, k_text <= n
// and 2 <= max_set_size <= sigma <= 62.
void validate(const RandomInstanceSpec& spec);

// The first `sigma` characters of "ab...z0..9AB...Z".
Alphabet instance_alphabet(std::size_t sigma);

struct Instance {
  DegenerateString pattern;
  DegenerateString text;
  bool planted = false;
  std::size_t planted_at = 0;  // 1-based, meaningful when planted
};

// Deterministic in `spec`. Non-solid positions are drawn without
// replacement; each non-solid set has a uniform size in 2..max_set_size and
// uniform members. With probability 1/2 an occurrence of the pattern is
// planted at a random alignment (keeping every non-solid count unchanged).
Instance generate_instance(const RandomInstanceSpec& spec);

// Repeatedly halves n and m (clamping the non-solid counts) while `fails`
// still reports a failure; returns the smallest failing spec found.
RandomInstanceSpec shrink(RandomInstanceSpec spec,
                          const std::function<bool(const RandomInstanceSpec&)>& fails);

}  // namespace degen::oracle
