#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "subwords/io.hpp"

using namespace subwords;

TEST_CASE("word lists round-trip through text") {
  const std::vector<BinaryWord> words = {
      BinaryWord::parse("0"), BinaryWord::parse("0101"),
      BinaryWord::parse("111")};
  std::ostringstream out;
  io::write_word_list(out, words);
  std::istringstream in(out.str());
  CHECK(io::read_word_list(in) == words);
}

TEST_CASE("word lists skip comments, blanks, and CR endings") {
  std::istringstream in(
      "# heading comment\n"
      "\n"
      "0101  \n"
      "  11 # trailing note\n"
      "001\r\n");
  const auto words = io::read_word_list(in);
  REQUIRE(words.size() == 3);
  CHECK(words[0].str() == "0101");
  CHECK(words[1].str() == "11");
  CHECK(words[2].str() == "001");
}

TEST_CASE("word lists report the offending line") {
  std::istringstream in("01\n012\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(io::read_word_list(in)),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(
      static_cast<void>(io::read_word_list_file("/nonexistent/words.txt")),
      std::invalid_argument);
}

TEST_CASE("census tables round-trip through CSV") {
  const std::map<Count, Count> table = {
      {Count(0), Count(4)},
      {Count(1), Count(2)},
      {Count(12), Count("123456789012345678901234567890")}};
  std::ostringstream out;
  io::write_census_csv(out, table);
  CHECK(out.str().rfind("k,count\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(io::read_census_csv(in) == table);

  std::ostringstream empty_out;
  io::write_census_csv(empty_out, {});
  std::istringstream empty_in(empty_out.str());
  CHECK(io::read_census_csv(empty_in).empty());
}

TEST_CASE("CSV reader enforces the header and numeric rows") {
  std::istringstream missing("0,4\n1,2\n");
  CHECK_THROWS_AS(static_cast<void>(io::read_census_csv(missing)),
                  std::invalid_argument);
  std::istringstream bad("k,count\n0,four\n");
  CHECK_THROWS_AS(static_cast<void>(io::read_census_csv(bad)),
                  std::invalid_argument);
}

TEST_CASE("census tables round-trip through b-file lines") {
  const std::map<Count, Count> table = {
      {Count(0), Count(1)}, {Count(3), Count(70)}, {Count(4), Count(0)}};
  std::ostringstream out;
  io::write_census_bfile(out, table);
  std::istringstream in(out.str());
  CHECK(io::read_census_bfile(in) == table);

  std::istringstream bad("1 2 3\n");
  CHECK_THROWS_AS(static_cast<void>(io::read_census_bfile(bad)),
                  std::invalid_argument);
}
