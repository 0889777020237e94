#include "degen/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "degen/bench.hpp"
#include "degen/error.hpp"
#include "degen/fasta.hpp"
#include "degen/matcher.hpp"
#include "degen/oracle.hpp"
#include "degen/parse.hpp"

namespace degen::cli {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_fasta(std::string_view contents) {
  const auto it = std::find_if_not(contents.begin(), contents.end(), is_space);
  return it != contents.end() && *it == '>';
}

std::string strip_space(std::string_view s) {
  std::string out;
  std::copy_if(s.begin(), s.end(), std::back_inserter(out),
               [](char c) { return !is_space(c); });
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

DegenerateString parse_text(std::string_view s, TextSyntax syntax,
                            const Alphabet& alphabet) {
  switch (syntax) {
    case TextSyntax::Solid: return parse_solid(s, alphabet);
    case TextSyntax::Bracket: return parse_bracket(s, alphabet);
    case TextSyntax::Iupac: return parse_iupac(s);
  }
  return {};
}

// Raw text before parsing; FASTA files keep their line bookkeeping.
struct RawText {
  bool fasta = false;
  std::string plain;
  std::string fasta_contents;
};

std::string verdict_list(const std::vector<MismatchVerdict>& verdicts) {
  if (verdicts.empty()) return "-";
  std::string out;
  for (const auto& v : verdicts) {
    if (!out.empty()) out += ',';
    out += std::to_string(v.position) + ':' +
           (v.verdict == Verdict::Fake ? "fake" : "real");
  }
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

}  // namespace

void fold_to_alphabet(std::string& s, const Alphabet& alphabet) {
  const auto symbols = alphabet.symbols();
  const bool has_upper = std::any_of(symbols.begin(), symbols.end(), [](char c) {
    return std::isupper(static_cast<unsigned char>(c));
  });
  const bool has_lower = std::any_of(symbols.begin(), symbols.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c));
  });
  if (has_upper == has_lower) return;
  for (auto& c : s) {
    const auto u = static_cast<unsigned char>(c);
    c = static_cast<char>(has_upper ? std::toupper(u) : std::tolower(u));
  }
}

std::vector<TextRecord> ingest_fasta(std::string_view contents, TextSyntax syntax,
                                     const Alphabet& alphabet,
                                     std::ostream* warnings) {
  std::vector<TextRecord> out;
  for (auto& rec : read_fasta(contents)) {
    fold_to_alphabet(rec.sequence, alphabet);
    if (rec.sequence.empty() && warnings) {
      *warnings << "warning: record '" << rec.id << "' has an empty sequence\n";
    }
    try {
      out.push_back({rec.id, parse_text(rec.sequence, syntax, alphabet), true});
    } catch (const ParseError& e) {
      const auto line = rec.line_of(e.offset() == 0 ? 0 : e.offset() - 1);
      throw ParseError(e.code(),
                       "record '" + rec.id + "', line " + std::to_string(line) +
                           ": " + e.what(),
                       e.offset());
    }
  }
  return out;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    if (config.bench) {
      const auto report = bench::run_scaling(bench::parse_grid(*config.bench));
      bench::write_tsv(report, out);
      const bool bounded = std::all_of(report.cells.begin(), report.cells.end(),
                                       [](const auto& c) { return c.within_query_bound(); });
      if (!bounded) {
        err << "error: LCE query count exceeded (k+1)(n-m+1)\n";
        return kExitSelfCheckFailed;
      }
      return kExitFound;
    }

    if (config.pattern.has_value() == config.pattern_file.has_value()) {
      throw Error(Errc::InvalidArgument,
                  "exactly one of --pattern or --pattern-file is required");
    }
    if (config.text && config.text_file) {
      throw Error(Errc::InvalidArgument,
                  "--text and --text-file are mutually exclusive");
    }

    std::string pattern_src;
    if (config.pattern) {
      pattern_src = *config.pattern;
    } else {
      const auto contents = read_file(*config.pattern_file);
      if (is_fasta(contents)) {
        const auto records = read_fasta(contents);
        pattern_src = records.front().sequence;
      } else {
        pattern_src = strip_space(contents);
      }
    }

    RawText raw;
    if (config.text) {
      raw.plain = *config.text;
    } else {
      std::string contents;
      if (config.text_file) {
        contents = read_file(*config.text_file);
      } else {
        contents.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      }
      raw.fasta = is_fasta(contents);
      if (raw.fasta) raw.fasta_contents = std::move(contents);
      else raw.plain = strip_space(contents);
    }

    const bool iupac = config.pattern_syntax == PatternSyntax::Iupac ||
                       config.text_syntax == TextSyntax::Iupac;
    std::optional<Alphabet> alphabet;
    if (iupac) {
      if (config.alphabet && *config.alphabet != "ACGT") {
        throw Error(Errc::InvalidArgument, "IUPAC syntax uses the alphabet ACGT");
      }
      alphabet = Alphabet::dna();
    } else if (config.alphabet) {
      alphabet.emplace(*config.alphabet);
    } else {
      // Every lowercased non-syntax character of the pattern and text.
      std::set<char> seen;
      auto collect = [&](std::string_view s, bool skip_headers) {
        bool header = false;
        bool line_start = true;
        for (char c : s) {
          if (skip_headers && line_start) header = c == '>';
          line_start = c == '\n';
          if (header || is_reserved_char(c)) continue;
          seen.insert(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
      };
      collect(pattern_src, false);
      collect(raw.plain, false);
      collect(raw.fasta_contents, true);
      if (seen.empty()) throw Error(Errc::EmptyPattern, "pattern is empty");
      alphabet.emplace(std::string(seen.begin(), seen.end()));
    }
    fold_to_alphabet(pattern_src, *alphabet);
    fold_to_alphabet(raw.plain, *alphabet);

    DegenerateString pattern;
    try {
      pattern = config.pattern_syntax == PatternSyntax::Iupac
                    ? parse_iupac(pattern_src)
                    : parse_bracket(pattern_src, *alphabet);
    } catch (const ParseError& e) {
      throw ParseError(e.code(), std::string("pattern: ") + e.what(), e.offset());
    }
    if (pattern.empty()) throw Error(Errc::EmptyPattern, "pattern is empty");

    std::vector<TextRecord> records;
    if (raw.fasta) {
      records = ingest_fasta(raw.fasta_contents, config.text_syntax, *alphabet, &err);
    } else {
      try {
        records.push_back({"-", parse_text(raw.plain, config.text_syntax, *alphabet), false});
      } catch (const ParseError& e) {
        throw ParseError(e.code(), std::string("text: ") + e.what(), e.offset());
      }
    }

    bool found = false;
    bool disagreement = false;
    FindOptions options;
    options.diagnostics = config.diagnostics;
    for (const auto& rec : records) {
      const auto report = find_occurrences(pattern, rec.sequence, *alphabet, options);
      found = found || !report.exact_occurrences.empty();

      // Verdicts belong to approximate occurrences; pick those of the exact ones.
      std::map<std::size_t, const std::vector<MismatchVerdict>*> verdicts_at;
      for (std::size_t a = 0; a < report.verdicts.size(); ++a) {
        verdicts_at[report.approximate_occurrences[a] + 1] = &report.verdicts[a];
      }
      static const std::vector<MismatchVerdict> kNone;
      auto verdicts_of = [&](std::size_t pos) -> const std::vector<MismatchVerdict>& {
        const auto it = verdicts_at.find(pos);
        return it == verdicts_at.end() ? kNone : *it->second;
      };

      for (const auto pos : report.exact_occurrences) {
        switch (config.format) {
          case OutputFormat::Positions:
            if (rec.from_fasta) out << rec.id << '\t';
            out << pos << '\n';
            break;
          case OutputFormat::Tsv:
            out << rec.id << '\t' << pos;
            if (config.diagnostics) out << '\t' << verdict_list(verdicts_of(pos));
            out << '\n';
            break;
          case OutputFormat::JsonLines: {
            nlohmann::ordered_json line = {{"record", rec.id},
                                   {"position", pos},
                                   {"pattern_length", pattern.size()}};
            if (config.diagnostics) {
              auto arr = nlohmann::ordered_json::array();
              for (const auto& v : verdicts_of(pos)) {
                arr.push_back({{"position", v.position},
                               {"verdict", v.verdict == Verdict::Fake ? "fake" : "real"}});
              }
              line["verdicts"] = std::move(arr);
            }
            out << line.dump() << '\n';
            break;
          }
        }
      }

      if (config.self_check) {
        const auto expected = oracle::naive_match(pattern, rec.sequence);
        if (expected != report.exact_occurrences) {
          disagreement = true;
          err << "self-check failed for record '" << rec.id << "': matcher "
              << join(report.exact_occurrences) << ", brute force " << join(expected)
              << '\n';
        }
      }
    }
    if (disagreement) return kExitSelfCheckFailed;
    return found ? kExitFound : kExitNotFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Find every occurrence of a degenerate pattern in a text"};
  RunConfig config;
  std::string pattern_syntax = "bracket";
  std::string text_syntax = "solid";
  std::string format = "positions";

  app.add_option("-p,--pattern", config.pattern, "Pattern, e.g. a[bc]da[bd]");
  app.add_option("--pattern-file", config.pattern_file, "File holding the pattern");
  app.add_option("--text", config.text, "Text to search");
  app.add_option("--text-file", config.text_file, "Text file, plain or FASTA");
  app.add_option("--alphabet", config.alphabet,
                 "Alphabet symbols in rank order (bracket/solid syntax)");
  app.add_option("--pattern-syntax", pattern_syntax, "bracket|iupac")
      ->check(CLI::IsMember({"bracket", "iupac"}));
  app.add_option("--text-syntax", text_syntax, "solid|bracket|iupac")
      ->check(CLI::IsMember({"solid", "bracket", "iupac"}));
  app.add_option("--format", format, "positions|tsv|json-lines")
      ->check(CLI::IsMember({"positions", "tsv", "json-lines"}));
  app.add_flag("--diagnostics", config.diagnostics, "Report per-mismatch verdicts");
  app.add_flag("--self-check", config.self_check,
               "Cross-check results against the brute-force matcher");
  app.add_option("--bench", config.bench,
                 "Scaling benchmark: n=<list>,k=<list>,sigma=<int>,reps=<int>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  config.pattern_syntax =
      pattern_syntax == "iupac" ? PatternSyntax::Iupac : PatternSyntax::Bracket;
  config.text_syntax = text_syntax == "iupac"     ? TextSyntax::Iupac
                       : text_syntax == "bracket" ? TextSyntax::Bracket
                                                  : TextSyntax::Solid;
  config.format = format == "tsv"          ? OutputFormat::Tsv
                  : format == "json-lines" ? OutputFormat::JsonLines
                                           : OutputFormat::Positions;
  return run(config, in, out, err);
}

}  // namespace degen::cli
