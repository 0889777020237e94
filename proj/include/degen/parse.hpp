#pragma once

#include <string>
#include <string_view>

#include "degen/alphabet.hpp"
#include "degen/degenerate_string.hpp"

namespace degen {

// Bracket notation: string := symbol*, symbol := char | '[' char+ ']'.
// Members of a group are deduplicated; a one-member group is solid. Whitespace
// and ',' inside a group are skipped, so "[a, b]" and "[ab]" are equivalent.
// Throws ParseError with UnknownCharacter, EmptyBracket or UnclosedBracket.
DegenerateString parse_bracket(std::string_view input, const Alphabet& alphabet);

// One solid symbol per character, no grouping syntax.
DegenerateString parse_solid(std::string_view input, const Alphabet& alphabet);

// IUPAC nucleotide codes over Alphabet::dna(), case-insensitive.
// Throws ParseError(UnknownCode) for anything outside the 15 codes.
DegenerateString parse_iupac(std::string_view input);

// Canonical bracket form: solid symbols as plain characters, groups as
// "[xy...]" with members in alphabet order and no whitespace.
std::string format_bracket(const DegenerateString& s, const Alphabet& alphabet);

// Inverse of parse_iupac, always uppercase.
std::string format_iupac(const DegenerateString& s);

}  // namespace degen
