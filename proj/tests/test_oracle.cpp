#include <stdexcept>

#include "doctest.h"
#include "subwords/limits.hpp"
#include "subwords/oracle.hpp"

using namespace subwords;

TEST_CASE("dynamic-programming count matches hand values") {
  CHECK(oracle::count_occurrences(BinaryWord::parse("0010"),
                                  BinaryWord::parse("0001010")) == 12);
  CHECK(oracle::count_occurrences(BinaryWord::parse("010011010110"),
                                  BinaryWord::parse("011100110100110")) == 6);
  CHECK(oracle::count_occurrences(BinaryWord::parse("01"),
                                  BinaryWord::parse("0101")) == 3);
  CHECK(oracle::count_occurrences(BinaryWord::parse("01"),
                                  BinaryWord::parse("10")) == 0);
  CHECK(oracle::count_occurrences_u64(BinaryWord::parse("01"),
                                      BinaryWord::parse("0101")) == 3);
  CHECK_THROWS_AS(oracle::count_occurrences(BinaryWord::parse(""),
                                            BinaryWord::parse("0")),
                  std::invalid_argument);
}

TEST_CASE("occurrence enumeration is ordered and boundable") {
  const auto p = BinaryWord::parse("01");
  const auto w = BinaryWord::parse("0101");
  const auto occs = oracle::enumerate_occurrences(p, w);
  REQUIRE(occs.size() == 3);
  CHECK(occs[0] == std::vector<Position>({1, 2}));
  CHECK(occs[1] == std::vector<Position>({1, 4}));
  CHECK(occs[2] == std::vector<Position>({3, 4}));
  CHECK(oracle::occurs(p, w));
  CHECK_FALSE(oracle::occurs(BinaryWord::parse("111"), w));
  CHECK_THROWS_AS(oracle::enumerate_occurrences(p, w, 2), BoundExceeded);
}

TEST_CASE("greedy extreme occurrences bracket the enumeration") {
  const auto p = BinaryWord::parse("0010");
  const auto w = BinaryWord::parse("0001010");
  const auto occs = oracle::enumerate_occurrences(p, w);
  REQUIRE_FALSE(occs.empty());
  CHECK(*oracle::lexmin_occurrence(p, w) == occs.front());
  CHECK(*oracle::lexmax_occurrence(p, w) == occs.back());
  CHECK_FALSE(
      oracle::lexmin_occurrence(p, BinaryWord::parse("1111")).has_value());
}

TEST_CASE("covered positions come from occurrence membership") {
  const auto p = BinaryWord::parse("01");
  const auto covered = oracle::covered_positions(p, BinaryWord::parse("0110"));
  REQUIRE(covered.size() == 5);
  CHECK(covered[1]);
  CHECK(covered[2]);
  CHECK(covered[3]);
  CHECK_FALSE(covered[4]);

  const auto none = oracle::covered_positions(p, BinaryWord::parse("10"));
  CHECK_FALSE(none[1]);
  CHECK_FALSE(none[2]);
}

TEST_CASE("reduce deletes exactly the uncovered letters") {
  const auto p = BinaryWord::parse("0010000111011");
  const auto w = BinaryWord::parse("00010010100101110011");
  CHECK(oracle::reduce(p, w).str() == "0001001000101110011");
  CHECK(oracle::reduce(BinaryWord::parse("01"), BinaryWord::parse("0110"))
            .str() == "011");
  CHECK_THROWS_AS(
      oracle::reduce(BinaryWord::parse("01"), BinaryWord::parse("10")),
      std::invalid_argument);
}

TEST_CASE("exhaustive word sets and census tables") {
  const auto p = BinaryWord::parse("01");
  CHECK(oracle::containing_words(p, 2).size() == 1);
  CHECK(oracle::containing_words(p, 4).size() == 11);
  CHECK(oracle::containing_words(BinaryWord::parse("110100"), 6).size() == 1);

  const auto prim3 = oracle::primitive_words(p, 3);
  REQUIRE(prim3.size() == 2);
  CHECK(prim3[0].str() == "001");
  CHECK(prim3[1].str() == "011");

  const auto table = oracle::census_table(p, 3);
  REQUIRE(table.size() == 3);
  CHECK(table.at(Count(0)) == 4);
  CHECK(table.at(Count(1)) == 2);
  CHECK(table.at(Count(2)) == 2);
  Count sum = 0;
  for (const auto& [k, v] : table) sum += v;
  CHECK(sum == 8);

  CHECK_THROWS_AS(oracle::containing_words(p, 63), std::invalid_argument);
}

TEST_CASE("exhaustive bound honours the environment override") {
  CHECK(kDefaultExhaustiveBound == 16);
  CHECK(exhaustive_bound() >= 1);
}
