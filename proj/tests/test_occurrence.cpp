#include <stdexcept>

#include "doctest.h"
#include "subwords/occurrence.hpp"
#include "subwords/oracle.hpp"

using namespace subwords;

namespace {

const BinaryWord kPattern = BinaryWord::parse("110100");
const BinaryWord kWord = BinaryWord::parse("011100110100110");

}  // namespace

TEST_CASE("same-parity sums over run ranges") {
  const RunDecomposition wd = decompose(kWord);
  CHECK(same_parity_sum(wd, 4, 8) == 5);
  CHECK(same_parity_sum(wd, 4, 4) == wd.run(4).length());
  CHECK(same_parity_sum(wd, 8, 4) == 0);
  CHECK_THROWS_AS(same_parity_sum(wd, 4, 7), std::invalid_argument);
  CHECK_THROWS_AS(same_parity_sum(wd, 0, 4), std::out_of_range);
}

TEST_CASE("left and right spans reach a letter quota in two-run hops") {
  const RunDecomposition wd = decompose(kWord);
  CHECK(left_span(wd, 7, 4) == std::optional<int>(2));
  CHECK(right_span(wd, 2, 6) == std::optional<int>(2));
  CHECK(left_span(wd, 1, 100) == std::nullopt);
  CHECK_THROWS_AS(left_span(wd, 1, 0), std::invalid_argument);
}

TEST_CASE("first and last run selectors for a pattern in a word") {
  const RunDecomposition pd = decompose(kPattern);
  const RunDecomposition wd = decompose(kWord);
  CHECK(alpha(pd, wd) == 2);
  CHECK(zeta(pd, wd) == std::optional<RunId>(9));
  CHECK(wd.run(2).first == 2);
  CHECK(wd.run(4).last == 8);
}

TEST_CASE("extreme occurrences and their heads") {
  const RunDecomposition pd = decompose(kPattern);
  const RunDecomposition wd = decompose(kWord);
  const auto heads = lexmin_heads(pd, wd);
  REQUIRE(heads.has_value());
  CHECK(*heads == std::vector<RunId>({2, 3, 4, 5}));
  const auto occ = lexmin_occurrence(kPattern, kWord);
  REQUIRE(occ.has_value());
  CHECK(*occ == std::vector<Position>({2, 3, 5, 7, 9, 11}));

  const auto p2 = BinaryWord::parse("0011100011");
  const auto w2 = BinaryWord::parse("1001011101000111010");
  const auto occ2 = lexmin_occurrence(p2, w2);
  REQUIRE(occ2.has_value());
  CHECK(*occ2 == std::vector<Position>({2, 3, 4, 6, 7, 9, 11, 12, 14, 15}));
  CHECK(*lexmin_heads(decompose(p2), decompose(w2)) ==
        std::vector<RunId>({2, 3, 6, 9}));

  const auto p13 = BinaryWord::parse("0010000111011");
  const auto w26 = BinaryWord::parse("10100101011010101001100101");
  const auto max_heads = lexmax_heads(decompose(p13), decompose(w26));
  REQUIRE(max_heads.has_value());
  CHECK(*max_heads == std::vector<RunId>({6, 7, 14, 17, 18, 21}));

  CHECK_FALSE(lexmin_occurrence(kPattern, BinaryWord::parse("000000"))
                  .has_value());
  CHECK_FALSE(lexmax_occurrence(kPattern, BinaryWord::parse("000000"))
                  .has_value());
}

TEST_CASE("count formula matches hand values and edge conventions") {
  CHECK(count_occurrences_formula(BinaryWord::parse("0010"),
                                  BinaryWord::parse("0001010")) == 12);
  CHECK(count_occurrences_formula(BinaryWord::parse("010011010110"),
                                  kWord) == 6);
  CHECK(count_occurrences_formula(BinaryWord::parse("01"),
                                  BinaryWord::parse("01")) == 1);
  CHECK(count_occurrences_formula(BinaryWord::parse("01"),
                                  BinaryWord::parse("")) == 0);
  CHECK(count_occurrences_formula(BinaryWord::parse("01"),
                                  BinaryWord::parse("10")) == 0);
  CHECK_THROWS_AS(count_occurrences_formula(BinaryWord::parse(""),
                                            BinaryWord::parse("0")),
                  std::invalid_argument);
}

TEST_CASE("lexmin membership rejects improvable occurrences") {
  CHECK(is_lexmin_occurrence(BinaryWord::parse("01"),
                             BinaryWord::parse("001"), {1, 3}));
  CHECK_FALSE(is_lexmin_occurrence(BinaryWord::parse("01"),
                                   BinaryWord::parse("001"), {2, 3}));
  CHECK_FALSE(is_lexmin_occurrence(BinaryWord::parse("01"),
                                   BinaryWord::parse("0011"), {2, 3}));
  CHECK_FALSE(
      is_lexmin_occurrence(kPattern, kWord, {2, 3, 5, 7, 9, 12}));
  CHECK(is_lexmin_occurrence(kPattern, kWord, {2, 3, 5, 7, 9, 11}));

  CHECK_THROWS_AS(is_lexmin_occurrence(BinaryWord::parse("01"),
                                       BinaryWord::parse("001"), {3, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_lexmin_occurrence(BinaryWord::parse("01"),
                                       BinaryWord::parse("001"), {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_lexmin_occurrence(BinaryWord::parse("01"),
                                       BinaryWord::parse("001"), {1}),
                  std::invalid_argument);
}

TEST_CASE("letter classification marks trapped and deficit letters") {
  const auto p13 = BinaryWord::parse("0010000111011");
  const auto w26 = BinaryWord::parse("10100101011010101001100101");
  const auto classes = classify_letters(p13, w26);
  for (Position l : {10, 11, 13, 18, 19, 25}) {
    CHECK_FALSE(classes[static_cast<std::size_t>(l)].covered);
    CHECK(classes[static_cast<std::size_t>(l)].reason ==
          LetterReason::middle_gap);
  }
  for (Position l : {1, 3}) {
    CHECK_FALSE(classes[static_cast<std::size_t>(l)].covered);
    CHECK(classes[static_cast<std::size_t>(l)].reason ==
          LetterReason::prefix_deficit);
  }
  for (Position l : {2, 4, 5, 8, 12, 26}) {
    CHECK(classes[static_cast<std::size_t>(l)].covered);
  }

  CHECK(classify_letters(p13, BinaryWord::parse("001000011011000111011"))[12]
            .covered);
  CHECK(classify_letters(p13, BinaryWord::parse("001001001101000111011"))[6]
            .covered);

  CHECK_THROWS_AS(classify_letters(p13, BinaryWord::parse("0")),
                  std::invalid_argument);
}

TEST_CASE("one-run patterns never cover opposite letters") {
  const auto p = BinaryWord::parse("0");
  const auto classes = classify_letters(p, BinaryWord::parse("010"));
  CHECK(classes[1].covered);
  CHECK_FALSE(classes[2].covered);
  CHECK(classes[2].reason == LetterReason::middle_gap);
  CHECK(classes[3].covered);
  CHECK_FALSE(is_primitive(p, BinaryWord::parse("010")));
  CHECK(is_primitive(p, BinaryWord::parse("000")));
}

TEST_CASE("primitivity verdicts and reduction") {
  const auto p13 = BinaryWord::parse("0010000111011");
  CHECK_FALSE(is_primitive(p13, BinaryWord::parse("0101001010100110101")));
  CHECK_FALSE(is_primitive(p13, BinaryWord::parse("00010010100101110011")));
  CHECK(is_primitive(p13, BinaryWord::parse("0001001000101110011")));

  CHECK(reduce_to_primitive(p13, BinaryWord::parse("00010010100101110011"))
            .str() == "0001001000101110011");
  const auto reduced =
      reduce_to_primitive(p13, BinaryWord::parse("0101001010100110101"));
  CHECK(is_primitive(p13, reduced));
  CHECK(oracle::count_occurrences(p13, reduced) ==
        oracle::count_occurrences(p13,
                                  BinaryWord::parse("0101001010100110101")));
  CHECK_THROWS_AS(reduce_to_primitive(p13, BinaryWord::parse("0")),
                  std::invalid_argument);
}
