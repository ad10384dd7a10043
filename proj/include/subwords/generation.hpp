#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "subwords/count.hpp"
#include "subwords/word.hpp"

namespace subwords {

// How many letters each stage of a constructor inserts.
struct InsertionPlan {
  std::vector<int> counts;
  int total() const;
};

// Result of a derivation-level enumeration: the distinct words, how many
// derivations produced each, and the total derivation count. `words`
// holds exactly the keys of `multiplicity`.
struct GenerationResult {
  std::set<BinaryWord> words;
  std::map<BinaryWord, std::uint64_t> multiplicity;
  std::uint64_t derivations = 0;
};

// All words of length n containing p, built constructively: a plan splits
// the n - |p| new letters across r + 1 zones anchored on the pattern's
// runs, and each zone is filled by a two-letter shuffle. The word set
// equals oracle::containing_words(p, n); words reachable through several
// plans carry multiplicity > 1. Throws std::invalid_argument for an empty
// pattern.
GenerationResult generate_containing(const BinaryWord& p, int n);

// Single-plan slice of generate_containing. The plan needs r + 1 entries
// when p has r >= 2 runs, and 2 entries for a one-run pattern.
GenerationResult generate_containing_for_plan(const BinaryWord& p,
                                              const InsertionPlan& plan);

// All primitive words of length n for p, built constructively in r
// stages: stage 1 extends the final run block, stage k >= 2 shuffles new
// letters into a zone that starts right after the still-intact pattern
// prefix and is cut off by the rightmost-occurrence anchor of the run
// being widened, recomputed on the current word. The word set equals
// oracle::primitive_words(p, n).
GenerationResult generate_primitive(const BinaryWord& p, int n);

// Single-plan slice of generate_primitive; the plan needs one entry per
// pattern run.
GenerationResult generate_primitive_for_plan(const BinaryWord& p,
                                             const InsertionPlan& plan);

// Primitive words of length at most n with exactly k occurrences of p,
// sorted: the constructive enumeration filtered by the reference count.
// Requires k >= 1; throws std::invalid_argument otherwise.
std::vector<BinaryWord> primitive_set(const BinaryWord& p, int n,
                                      const Count& k);

// Same set, but filtered through the structural count formula instead of
// the reference count. Must agree with primitive_set; requires k >= 1.
std::vector<BinaryWord> solve_primitive_equation(const BinaryWord& p, int n,
                                                 const Count& k);

// One stretch of a primitive word that can absorb new letters when the
// word grows: the letters at [lo, hi] may be shuffled with copies of
// `letter` without disturbing any occurrence or covering the new letters.
// hi = lo - 1 encodes an empty stretch (pure insertion point at lo).
struct CompletionRegion {
  Position lo = 0;
  Position hi = 0;
  int letter = 0;  // the letter this region absorbs
  int hosts() const { return hi >= lo ? hi - lo + 1 : 0; }
};

// The insertion regions of a primitive word, ordered left to right with
// pairwise disjoint spans: one in front of the first run block, one
// behind the last, and one strictly between the extreme-occurrence
// anchors of each interior pattern run whose anchors are not adjacent or
// inverted. Requires is_primitive(p, w); throws std::invalid_argument
// otherwise.
std::vector<CompletionRegion> completion_regions(const BinaryWord& p,
                                                 const BinaryWord& w);

// Number of length-`target` words that reduce to w: the sum over all ways
// to split the target - |w| new letters across the regions of the product
// of per-region shuffle counts. Zero when target < |w|, one when equal.
Count completion_count(const BinaryWord& p, const BinaryWord& w, int target);

// Those words themselves, sorted. Every returned word reduces back to w
// and has exactly as many occurrences of p as w does.
std::vector<BinaryWord> enumerate_completions(const BinaryWord& p,
                                              const BinaryWord& w, int target);

// Number of length-n words with exactly k occurrences of p, computed by
// summing completion counts over the primitive words with k occurrences.
// Requires k >= 1; agrees with oracle::census_table. The k = 0 value is
// only available through census_distribution, as the complement of all
// the others against 2^n.
Count census_primitive(const BinaryWord& p, int n, const Count& k);

// The whole census at once: every k with a nonzero number of words, k = 0
// included when nonzero. Entries for k >= 1 match census_primitive.
std::map<Count, Count> census_distribution(const BinaryWord& p, int n);

}  // namespace subwords
