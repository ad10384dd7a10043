#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "subwords/count.hpp"
#include "subwords/word.hpp"

namespace subwords::io {

// Word-list format: one ASCII 0/1 word per line, '#' starts a comment,
// blank lines are skipped. Readers throw std::invalid_argument with the
// offending line number on malformed input.
std::vector<BinaryWord> read_word_list(std::istream& in);
std::vector<BinaryWord> read_word_list_file(const std::string& path);
void write_word_list(std::ostream& out, const std::vector<BinaryWord>& words);

// Census table as CSV: a "k,count" header, then one row per key in
// ascending order. Values are full decimal integers.
void write_census_csv(std::ostream& out, const std::map<Count, Count>& table);
std::map<Count, Count> read_census_csv(std::istream& in);

// Census table as two-column "k value" lines in ascending k, the layout
// used for sequence b-files. No header.
void write_census_bfile(std::ostream& out, const std::map<Count, Count>& table);
std::map<Count, Count> read_census_bfile(std::istream& in);

}  // namespace subwords::io
