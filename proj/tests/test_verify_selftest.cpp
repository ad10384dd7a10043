#include "doctest.h"
#include "subwords/occurrence.hpp"
#include "subwords/verify.hpp"

using namespace subwords;

namespace {

verify::SuiteOptions small_bounds() {
  verify::SuiteOptions opt;
  opt.count_pattern_max = 2;
  opt.count_word_max = 6;
  opt.extremal_pattern_max = 2;
  opt.extremal_word_max = 5;
  opt.classification_pattern_max = 2;
  opt.classification_word_max = 5;
  opt.generation_pattern_max = 2;
  opt.generation_length_max = 5;
  opt.completion_pattern_max = 2;
  opt.completion_word_max = 4;
  opt.completion_insert_max = 2;
  opt.census_pattern_max = 2;
  opt.census_length_max = 5;
  return opt;
}

}  // namespace

TEST_CASE("count agreement passes at small bounds") {
  const auto result = verify::run_count_agreement(small_bounds());
  CHECK(result.passed);
  CHECK(result.cases > 0);
  CHECK(result.counterexamples.empty());
  CHECK(result.name == "count-agreement");
}

TEST_CASE("a sabotaged count is caught and reported") {
  auto opt = small_bounds();
  const auto bad_word = BinaryWord::parse("0101");
  opt.count_override = [&](const BinaryWord& p, const BinaryWord& w) {
    Count honest = count_occurrences_formula(p, w);
    if (w == bad_word) honest += 1;
    return honest;
  };
  const auto result = verify::run_count_agreement(opt);
  CHECK_FALSE(result.passed);
  REQUIRE_FALSE(result.counterexamples.empty());
  const auto& cx = result.counterexamples.front();
  CHECK(cx.suite == "count-agreement");
  CHECK(cx.word == "0101");
  CHECK_FALSE(cx.expected.empty());
  CHECK_FALSE(cx.got.empty());
  CHECK(cx.expected != cx.got);
  CHECK(result.counterexamples.size() <= 5);
}

TEST_CASE("the full report aggregates suite verdicts") {
  auto opt = small_bounds();
  const auto clean = verify::run_all(opt);
  CHECK(clean.all_passed);
  REQUIRE(clean.suites.size() == 8);
  CHECK(clean.suites[0].name == "reference-examples");
  CHECK(clean.suites[1].name == "count-agreement");
  CHECK(clean.suites[7].name == "census-identity");
  for (const auto& suite : clean.suites) {
    CHECK(suite.passed);
    CHECK(suite.cases > 0);
  }

  opt.count_override = [](const BinaryWord& p, const BinaryWord& w) {
    return count_occurrences_formula(p, w) + 1;
  };
  const auto broken = verify::run_all(opt);
  CHECK_FALSE(broken.all_passed);
}
