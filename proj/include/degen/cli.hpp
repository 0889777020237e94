#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/alphabet.hpp"
#include "degen/degenerate_string.hpp"

namespace degen::cli {

inline constexpr int kExitFound = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSelfCheckFailed = 3;

enum class PatternSyntax { Bracket, Iupac };
enum class TextSyntax { Solid, Bracket, Iupac };
enum class OutputFormat { Positions, Tsv, JsonLines };

struct RunConfig {
  std::optional<std::string> pattern;
  std::optional<std::string> pattern_file;
  std::optional<std::string> text;
  std::optional<std::string> text_file;
  // Bracket/solid syntax only; derived from the inputs when absent.
  std::optional<std::string> alphabet;
  PatternSyntax pattern_syntax = PatternSyntax::Bracket;
  TextSyntax text_syntax = TextSyntax::Solid;
  OutputFormat format = OutputFormat::Positions;
  bool diagnostics = false;
  bool self_check = false;
  std::optional<std::string> bench;
};

struct TextRecord {
  std::string id;
  DegenerateString sequence;
  bool from_fasta = false;
};

// Folds `s` to the alphabet's case when the alphabet is single-case
// (lowercase for bracket alphabets, uppercase for ACGT); otherwise a no-op.
void fold_to_alphabet(std::string& s, const Alphabet& alphabet);

// Parses each FASTA record under `syntax`. Parse errors are rethrown with
// the record id and input line attached. Empty records are kept and a
// warning is written to `warnings` when given.
std::vector<TextRecord> ingest_fasta(std::string_view contents, TextSyntax syntax,
                                     const Alphabet& alphabet,
                                     std::ostream* warnings = nullptr);

// Executes a configuration. Text is read from `in` when the config has no
// text source. Returns 0 if any occurrence was found, 1 if none, 2 on an
// input error, 3 when --self-check disagrees with the brute-force matcher.
int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

// Command-line entry point: flag parsing followed by run().
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& err);

}  // namespace degen::cli
