#include "subwords/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace subwords::io {

namespace {

// Strips a '#' comment and surrounding whitespace; returns the payload.
std::string clean_line(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  const char* ws = " \t\r\n";
  const auto first = line.find_first_not_of(ws);
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(ws);
  return line.substr(first, last - first + 1);
}

Count parse_count(const std::string& token, int line_no, const char* what) {
  if (token.empty()) {
    throw std::invalid_argument(std::string("line ") + std::to_string(line_no) +
                                ": missing " + what);
  }
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument(std::string("line ") +
                                  std::to_string(line_no) + ": bad " + what +
                                  " '" + token + "'");
    }
  }
  return Count(token);
}

}  // namespace

std::vector<BinaryWord> read_word_list(std::istream& in) {
  std::vector<BinaryWord> words;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    try {
      words.push_back(BinaryWord::parse(line));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(std::string("line ") +
                                  std::to_string(line_no) + ": bad word '" +
                                  line + "'");
    }
  }
  return words;
}

std::vector<BinaryWord> read_word_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open word list '" + path + "'");
  }
  return read_word_list(in);
}

void write_word_list(std::ostream& out, const std::vector<BinaryWord>& words) {
  for (const BinaryWord& w : words) {
    out << w.str() << '\n';
  }
}

void write_census_csv(std::ostream& out, const std::map<Count, Count>& table) {
  out << "k,count\n";
  for (const auto& [k, v] : table) {
    out << k << ',' << v << '\n';
  }
}

std::map<Count, Count> read_census_csv(std::istream& in) {
  std::map<Count, Count> table;
  std::string raw;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "k,count") {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected header 'k,count'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'k,count' row");
    }
    const Count k = parse_count(line.substr(0, comma), line_no, "key");
    const Count v = parse_count(line.substr(comma + 1), line_no, "value");
    table[k] = v;
  }
  if (!header_seen) {
    throw std::invalid_argument("missing 'k,count' header");
  }
  return table;
}

void write_census_bfile(std::ostream& out,
                        const std::map<Count, Count>& table) {
  for (const auto& [k, v] : table) {
    out << k << ' ' << v << '\n';
  }
}

std::map<Count, Count> read_census_bfile(std::istream& in) {
  std::map<Count, Count> table;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'k value' row");
    }
    const Count k = parse_count(line.substr(0, space), line_no, "key");
    const Count v = parse_count(line.substr(space + 1), line_no, "value");
    table[k] = v;
  }
  return table;
}

}  // namespace subwords::io
