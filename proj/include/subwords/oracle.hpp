#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "subwords/count.hpp"
#include "subwords/word.hpp"

namespace subwords::oracle {

// Reference implementations built on first principles: a textbook dynamic
// program over prefixes plus exhaustive search. Nothing in this namespace
// uses run decompositions, anchor chains, or any of the structural
// machinery in occurrence.hpp / generation.hpp, so agreement between the
// two routes is meaningful evidence.

// Number of occurrences of p as a subsequence of w, by the prefix-count
// dynamic program. Throws std::invalid_argument for an empty pattern.
Count count_occurrences(const BinaryWord& p, const BinaryWord& w);

// Same dynamic program in std::uint64_t. Safe whenever the true count fits;
// counts are bounded by C(|w|, |p|) <= 2^|w|, so |w| <= 62 guarantees no
// overflow. Callers outside that regime must use count_occurrences.
std::uint64_t count_occurrences_u64(const BinaryWord& p, const BinaryWord& w);

// Whether p occurs in w as a subsequence (greedy scan).
bool occurs(const BinaryWord& p, const BinaryWord& w);

// All occurrences of p in w as strictly increasing position tuples
// (1-based), in lexicographic tuple order. Throws BoundExceeded when the
// count exceeds max_results (default: no limit beyond memory).
std::vector<std::vector<Position>> enumerate_occurrences(
    const BinaryWord& p, const BinaryWord& w,
    std::optional<std::uint64_t> max_results = std::nullopt);

// Lexicographically smallest / largest occurrence of p in w, where
// occurrences are compared as position tuples. Nullopt when p does not
// occur in w. Computed greedily, independently of enumerate_occurrences.
std::optional<std::vector<Position>> lexmin_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w);
std::optional<std::vector<Position>> lexmax_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w);

// Positions of w that participate in at least one occurrence of p, decided
// by reachability: position l is covered iff some occurrence uses it.
// Returned as a 1-based inclusion mask (index 0 unused).
std::vector<bool> covered_positions(const BinaryWord& p, const BinaryWord& w);

// All words of length n containing p, in lexicographic order. Exhaustive
// over 2^n candidates; requires n <= 62.
std::vector<BinaryWord> containing_words(const BinaryWord& p, int n);

// All words of length n in which every letter lies in some occurrence of
// p, in lexicographic order. Exhaustive; requires n <= 62.
std::vector<BinaryWord> primitive_words(const BinaryWord& p, int n);

// Copy of w with every letter outside all occurrences removed; decided
// entirely by covered_positions. Requires that p occurs in w.
BinaryWord reduce(const BinaryWord& p, const BinaryWord& w);

// Histogram of occurrence counts over all 2^n words of length n:
// result[c] = number of words w with exactly c occurrences of p.
// Exhaustive; requires n <= 62.
std::map<Count, Count> census_table(const BinaryWord& p, int n);

}  // namespace subwords::oracle
