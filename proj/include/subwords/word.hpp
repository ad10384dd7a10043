#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subwords {

using Position = int;  // 1-based letter index
using RunId = int;     // 1-based run index

// Immutable binary word over {0,1}. Letters are indexed 1..size().
// The empty word is a valid value.
class BinaryWord {
public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  // Parses a string of '0'/'1' characters; throws std::invalid_argument on
  // anything else. The empty string parses to the empty word.
  static BinaryWord parse(std::string_view text);

  // Word of the given length whose letters are the big-endian bits of mask,
  // so increasing mask enumerates words of that length in lexicographic
  // order. Requires 0 <= length <= 63.
  static BinaryWord from_mask(int length, std::uint64_t mask);

  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }

  // Letter at 1-based position i; throws std::out_of_range.
  int at(Position i) const;

  BinaryWord reversed() const;
  std::string str() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const BinaryWord&) const = default;
  // Orders by length first, then lexicographically: the order used for all
  // enumeration output.
  std::strong_ordering operator<=>(const BinaryWord& other) const;

private:
  std::vector<std::uint8_t> bits_;
};

// Maximal block of equal letters.
struct Run {
  int letter = 0;      // 0 or 1
  Position first = 0;  // position of the run's first letter
  Position last = 0;   // position of the run's last letter
  int length() const { return last - first + 1; }
};

// Run decomposition of a word: runs in left-to-right order, adjacent runs
// carrying distinct letters. Concatenating the runs reproduces the word.
class RunDecomposition {
public:
  RunDecomposition() = default;

  const BinaryWord& word() const { return word_; }
  int run_count() const { return static_cast<int>(runs_.size()); }
  const std::vector<Run>& runs() const { return runs_; }

  // 1-based run access; throws std::out_of_range.
  const Run& run(RunId i) const;

  // Index of the run containing position k; throws std::out_of_range.
  RunId run_index(Position k) const;

private:
  friend RunDecomposition decompose(const BinaryWord& w);
  BinaryWord word_;
  std::vector<Run> runs_;
  std::vector<RunId> run_of_;  // per position, 0-based storage
};

RunDecomposition decompose(const BinaryWord& w);

// Number of letters equal to w[l1] at positions l1..l2 inclusive.
// Requires l1 <= l2 and w[l1] == w[l2]; throws std::invalid_argument.
int same_parity_distance(const BinaryWord& w, Position l1, Position l2);

// Position of the k-th letter equal to w[j] scanning leftwards from j, with
// j itself counting as the first: there are exactly k such letters between
// the result and j inclusive. k = 1 returns j. Returns nullopt when fewer
// than k such letters exist.
std::optional<Position> nth_same_parity_left(const BinaryWord& w, Position j,
                                             int k);

// Mirror image of nth_same_parity_left, scanning rightwards.
std::optional<Position> nth_same_parity_right(const BinaryWord& w, Position j,
                                              int k);

// Suffix of w starting at position j. j = size()+1 yields the empty word.
BinaryWord tail(const BinaryWord& w, Position j);

}  // namespace subwords
