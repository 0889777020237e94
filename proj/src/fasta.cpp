#include "degen/fasta.hpp"

#include <algorithm>
#include <cctype>

#include "degen/error.hpp"

namespace degen {

namespace {
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
}  // namespace

std::size_t FastaRecord::line_of(std::size_t offset) const {
  std::size_t line = header_line;
  for (const auto& [start, l] : line_starts) {
    if (start > offset) break;
    line = l;
  }
  return line;
}

std::vector<FastaRecord> read_fasta(std::string_view contents) {
  if (std::all_of(contents.begin(), contents.end(), is_space)) {
    throw Error(Errc::EmptyFile, "FASTA input is empty");
  }
  std::vector<FastaRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    auto eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    const auto line = contents.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.front() == '>') {
      FastaRecord rec;
      auto header = line.substr(1);
      const auto id_end = std::find_if(header.begin(), header.end(), is_space);
      rec.id.assign(header.begin(), id_end);
      rec.header_line = line_no;
      records.push_back(std::move(rec));
      continue;
    }
    std::string seq;
    for (char c : line) {
      if (!is_space(c)) seq += c;
    }
    if (seq.empty()) continue;
    if (records.empty()) {
      throw Error(Errc::SequenceBeforeHeader,
                  "sequence data on line " + std::to_string(line_no) +
                      " before the first '>' header");
    }
    auto& rec = records.back();
    rec.line_starts.emplace_back(rec.sequence.size(), line_no);
    rec.sequence += seq;
  }
  return records;
}

}  // namespace degen
