#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subwords/count.hpp"
#include "subwords/word.hpp"

namespace subwords::verify {

// Sweep bounds for the agreement suites. The defaults are the library's
// acceptance gate; smaller values give a faster, shallower sweep.
struct SuiteOptions {
  int count_pattern_max = 5;
  int count_word_max = 12;
  int extremal_pattern_max = 4;
  int extremal_word_max = 10;
  int classification_pattern_max = 5;
  int classification_word_max = 12;
  int generation_pattern_max = 4;
  int generation_length_max = 10;
  int completion_pattern_max = 4;
  int completion_word_max = 6;
  int completion_insert_max = 4;
  int census_pattern_max = 4;
  int census_length_max = 12;
  // Self-test hook: when set, stands in for the structural count inside
  // the count-agreement sweep, so the harness can demonstrate that a
  // wrong count is caught and reported.
  std::function<Count(const BinaryWord&, const BinaryWord&)> count_override;
};

// One disagreement between a structural routine and its oracle.
struct Counterexample {
  std::string suite;
  std::string pattern;
  std::string word;
  std::string expected;
  std::string got;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  // At most five disagreements are kept; `cases` keeps the full tally.
  std::vector<Counterexample> counterexamples;
  std::string note;
  double seconds = 0.0;
};

struct Report {
  std::vector<SuiteResult> suites;
  bool all_passed = false;
};

// Frozen worked examples: every published helper value, extreme
// occurrence, construction member, completion and census figure that the
// library is pinned to. Runs in well under a second.
SuiteResult run_reference_examples(const SuiteOptions& options = {});

// Structural count formula against the dynamic-programming count on every
// pattern/word pair inside the bounds.
SuiteResult run_count_agreement(const SuiteOptions& options = {});

// Structural extreme occurrences against componentwise min/max over the
// full enumeration, plus the lexmin membership test on every occurrence.
SuiteResult run_extremal_agreement(const SuiteOptions& options = {});

// Letter classification against occurrence-membership reachability on
// every position of every containing word inside the bounds.
SuiteResult run_classification_agreement(const SuiteOptions& options = {});

// Constructive containing-word enumeration against the exhaustive filter;
// also aggregates derivation multiplicity statistics into the note.
SuiteResult run_containing_generation(const SuiteOptions& options = {});

// Constructive primitive-word enumeration against the exhaustive filter,
// with the same multiplicity reporting.
SuiteResult run_primitive_generation(const SuiteOptions& options = {});

// Completion sets against reduction preimages: every enumerated
// completion reduces back to its source, the sets partition the words
// that reduce into the sweep, and the counting formula matches set sizes.
SuiteResult run_completion_partition(const SuiteOptions& options = {});

// Census by primitive-core summation against the exhaustive histogram,
// including the power-sum identity and primitive-filter agreement.
SuiteResult run_census_identity(const SuiteOptions& options = {});

// All suites above, in order.
Report run_all(const SuiteOptions& options = {});

}  // namespace subwords::verify
