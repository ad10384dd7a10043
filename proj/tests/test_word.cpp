#include <stdexcept>

#include "doctest.h"
#include "subwords/word.hpp"

using namespace subwords;

TEST_CASE("parse accepts ASCII binary and rejects everything else") {
  const BinaryWord w = BinaryWord::parse("0110");
  CHECK(w.size() == 4);
  CHECK(w.str() == "0110");
  CHECK(w.at(1) == 0);
  CHECK(w.at(2) == 1);
  CHECK(BinaryWord::parse("").empty());
  CHECK_THROWS_AS(BinaryWord::parse("0120"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse("01 0"), std::invalid_argument);
}

TEST_CASE("from_mask lays the mask out most significant bit first") {
  CHECK(BinaryWord::from_mask(3, 0b101).str() == "101");
  CHECK(BinaryWord::from_mask(4, 0b0001).str() == "0001");
  CHECK(BinaryWord::from_mask(0, 0).empty());
  CHECK_THROWS_AS(BinaryWord::from_mask(64, 0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::from_mask(-1, 0), std::invalid_argument);
}

TEST_CASE("positions are 1-based and range-checked") {
  const BinaryWord w = BinaryWord::parse("10");
  CHECK(w.at(1) == 1);
  CHECK(w.at(2) == 0);
  CHECK_THROWS_AS(w.at(0), std::out_of_range);
  CHECK_THROWS_AS(w.at(3), std::out_of_range);
}

TEST_CASE("ordering is by length, then lexicographic") {
  const auto a = BinaryWord::parse("1");
  const auto b = BinaryWord::parse("00");
  const auto c = BinaryWord::parse("01");
  CHECK(a < b);
  CHECK(b < c);
  CHECK(BinaryWord::parse("0110").reversed().str() == "0110");
  CHECK(BinaryWord::parse("001").reversed().str() == "100");
}

TEST_CASE("run decomposition indexes runs and positions") {
  const BinaryWord w = BinaryWord::parse("011100110100110");
  const RunDecomposition dec = decompose(w);
  CHECK(dec.run_count() == 9);
  CHECK(dec.run(2).letter == 1);
  CHECK(dec.run(2).first == 2);
  CHECK(dec.run(2).last == 4);
  CHECK(dec.run(2).length() == 3);
  CHECK(dec.run_index(3) == 2);
  CHECK(dec.run_index(1) == 1);
  CHECK(dec.run_index(15) == 9);
  CHECK_THROWS_AS(dec.run(0), std::out_of_range);
  CHECK_THROWS_AS(dec.run(10), std::out_of_range);

  const RunDecomposition empty_dec = decompose(BinaryWord::parse(""));
  CHECK(empty_dec.run_count() == 0);
}

TEST_CASE("same-parity distance counts matching letters inside the range") {
  const BinaryWord w = BinaryWord::parse("011100110100110");
  CHECK(same_parity_distance(w, 3, 13) == 6);
  CHECK(same_parity_distance(w, 3, 3) == 1);
  CHECK_THROWS_AS(same_parity_distance(w, 13, 3), std::invalid_argument);
  CHECK_THROWS_AS(same_parity_distance(w, 3, 5), std::invalid_argument);
}

TEST_CASE("nth letter of equal value to the left and right") {
  const BinaryWord w = BinaryWord::parse("10100101011010101001100101");
  CHECK(nth_same_parity_left(w, 18, 7) == std::optional<Position>(5));
  CHECK(nth_same_parity_right(w, 11, 4) == std::optional<Position>(17));
  CHECK(nth_same_parity_left(w, 18, 1) == std::optional<Position>(18));
  CHECK(nth_same_parity_right(w, 11, 1) == std::optional<Position>(11));
  CHECK_FALSE(nth_same_parity_left(w, 2, 12).has_value());
  CHECK_THROWS_AS(nth_same_parity_left(w, 2, 0), std::invalid_argument);
}

TEST_CASE("tail returns the suffix from a 1-based start") {
  const BinaryWord w = BinaryWord::parse("10100101011010101001100101");
  CHECK(tail(w, 19).str() == "01100101");
  CHECK(tail(w, 1) == w);
  CHECK(tail(w, w.size() + 1).empty());
  CHECK_THROWS_AS(tail(w, 0), std::out_of_range);
  CHECK_THROWS_AS(tail(w, w.size() + 2), std::out_of_range);
}
