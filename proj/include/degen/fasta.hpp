#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degen {

struct FastaRecord {
  std::string id;        // header text after '>' up to the first whitespace
  std::string sequence;  // sequence lines concatenated, whitespace removed
  std::size_t header_line = 0;  // 1-based
  // (sequence offset, 1-based input line) for the start of each sequence line.
  std::vector<std::pair<std::size_t, std::size_t>> line_starts;

  // Input line holding the 0-based sequence offset.
  std::size_t line_of(std::size_t offset) const;
};

// Splits FASTA text into records. Throws Error(EmptyFile) when there is no
// non-whitespace content and Error(SequenceBeforeHeader) when sequence data
// precedes the first '>' line.
std::vector<FastaRecord> read_fasta(std::string_view contents);

}  // namespace degen
