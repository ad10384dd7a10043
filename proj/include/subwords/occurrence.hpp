#pragma once

#include <optional>
#include <vector>

#include "subwords/count.hpp"
#include "subwords/word.hpp"

namespace subwords {

// Structural occurrence calculus. Everything here works through the run
// decomposition of the pattern and the word; the matching counterparts in
// oracle.hpp are plain dynamic programs, and the two routes are compared
// by the verification suites.

// Total length of the same-letter runs i, i+2, ..., j of d. Zero when
// i > j. Throws std::invalid_argument when j - i is odd (the endpoints
// would carry different letters) and std::out_of_range for bad indices.
int same_parity_sum(const RunDecomposition& d, RunId i, RunId j);

// Smallest k such that runs i-2k, i-2k+2, ..., i together hold at least
// `target` letters; nullopt when even the full same-letter prefix up to
// run i is too short. Requires target >= 1.
std::optional<int> left_span(const RunDecomposition& d, RunId i, int target);

// Mirror image of left_span: smallest k with runs i, i+2, ..., i+2k
// holding at least `target` letters.
std::optional<int> right_span(const RunDecomposition& d, RunId i, int target);

// Index of the first run of w that can host the pattern's first letter:
// 1 when w starts with the same letter as p, else 2. Throws
// std::invalid_argument when either word is empty.
int alpha(const RunDecomposition& pattern, const RunDecomposition& word);

// Index of the last run of w that can host the pattern's last letter:
// the last run itself on a letter match, otherwise the one before it.
// Nullopt when that falls off the left end (single-run w, wrong letter).
std::optional<RunId> zeta(const RunDecomposition& pattern,
                          const RunDecomposition& word);

// Run indices L_1 < L_2 < ... < L_r of w such that the leftmost occurrence
// of p places the first letter of its i-th run block in run L_i. Nullopt
// exactly when p does not occur in w.
std::optional<std::vector<RunId>> lexmin_heads(const RunDecomposition& pattern,
                                               const RunDecomposition& word);

// Run indices M_1 < M_2 < ... < M_r of w such that the rightmost occurrence
// of p places the last letter of its i-th run block in run M_i (entry i is
// the anchor for pattern run i). Nullopt exactly when p does not occur.
std::optional<std::vector<RunId>> lexmax_heads(const RunDecomposition& pattern,
                                               const RunDecomposition& word);

// Lexicographically smallest / largest occurrence of p in w as a position
// tuple, built from the head chains above (not by search). Nullopt when p
// does not occur in w. Throws std::invalid_argument for an empty pattern.
std::optional<std::vector<Position>> lexmin_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w);
std::optional<std::vector<Position>> lexmax_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w);

// Number of occurrences of p in w computed by the run-structured
// summation that walks pattern runs right to left, splitting on how far
// left each run block reaches. Agrees with oracle::count_occurrences on
// every input; the verification suites sweep that claim.
Count count_occurrences_formula(const BinaryWord& p, const BinaryWord& w);

// Decides whether the given occurrence is the lexicographically smallest
// one without enumerating or constructing any other occurrence: a letter
// equal to the current run's letter that lies strictly left of the block's
// last chosen position, is not part of the occurrence, and is preceded by
// a complete match of the earlier runs, witnesses non-minimality. Throws
// std::invalid_argument when occ is not an occurrence of p in w.
bool is_lexmin_occurrence(const BinaryWord& p, const BinaryWord& w,
                          const std::vector<Position>& occ);

// Why a letter of w is or is not usable by some occurrence of p.
enum class LetterReason {
  in_extreme,      // member of the leftmost or rightmost occurrence
  bridged,         // usable, witnessed by neither extreme
  middle_gap,      // trapped strictly between the extreme blocks of a run
  prefix_deficit,  // too far left: not enough pattern prefix before it
  suffix_deficit,  // too far right: not enough pattern suffix after it
};

struct LetterClass {
  bool covered = false;  // member of at least one occurrence
  LetterReason reason = LetterReason::prefix_deficit;
};

// Classifies every letter of w (1-based; index 0 unused). Requires p to
// occur in w; throws std::invalid_argument otherwise. The covered verdict
// is derived purely from the extreme-occurrence geometry; the verification
// suites compare it letter by letter against oracle::covered_positions.
std::vector<LetterClass> classify_letters(const BinaryWord& p,
                                          const BinaryWord& w);

// A word is primitive for p when p occurs in it and every letter is
// covered, i.e. deleting any single letter changes the occurrence set.
bool is_primitive(const BinaryWord& p, const BinaryWord& w);

// Deletes every uncovered letter of w. The result is primitive for p and
// has the same number of occurrences of p as w. Requires p to occur in w;
// throws std::invalid_argument otherwise.
BinaryWord reduce_to_primitive(const BinaryWord& p, const BinaryWord& w);

}  // namespace subwords
