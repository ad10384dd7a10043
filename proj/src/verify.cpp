#include "subwords/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "subwords/generation.hpp"
#include "subwords/occurrence.hpp"
#include "subwords/oracle.hpp"

namespace subwords::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Collects case tallies and the first few disagreements for one suite.
class Recorder {
 public:
  explicit Recorder(std::string name) : start_(Clock::now()) {
    result_.name = std::move(name);
    result_.passed = true;
  }

  void check(bool ok, const std::string& pattern, const std::string& word,
             const std::string& expected, const std::string& got) {
    ++result_.cases;
    if (ok) return;
    result_.passed = false;
    if (result_.counterexamples.size() < 5) {
      result_.counterexamples.push_back(
          {result_.name, pattern, word, expected, got});
    }
  }

  void note(std::string text) { result_.note = std::move(text); }

  SuiteResult finish() {
    result_.seconds =
        std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  SuiteResult result_;
  Clock::time_point start_;
};

std::vector<BinaryWord> words_of_length(int len) {
  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << len);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    out.push_back(BinaryWord::from_mask(len, mask));
  }
  return out;
}

std::vector<BinaryWord> patterns_up_to(int max_len) {
  std::vector<BinaryWord> out;
  for (int len = 1; len <= max_len; ++len) {
    for (BinaryWord& w : words_of_length(len)) out.push_back(std::move(w));
  }
  return out;
}

template <typename Seq>
std::string fmt_sequence(const Seq& xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

std::string fmt_table(const std::map<Count, Count>& table) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : table) {
    if (!first) os << ", ";
    os << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string reason_name(LetterReason reason) {
  switch (reason) {
    case LetterReason::in_extreme: return "in-extreme";
    case LetterReason::bridged: return "bridged";
    case LetterReason::middle_gap: return "middle-gap";
    case LetterReason::prefix_deficit: return "prefix-deficit";
    case LetterReason::suffix_deficit: return "suffix-deficit";
  }
  return "?";
}

// First element of `a` xor `b`, rendered for a counterexample payload.
std::string first_difference(const std::vector<BinaryWord>& a,
                             const std::vector<BinaryWord>& b,
                             const char* a_name, const char* b_name) {
  for (const BinaryWord& w : a) {
    if (!std::binary_search(b.begin(), b.end(), w)) {
      return w.str() + std::string(" only in ") + a_name;
    }
  }
  for (const BinaryWord& w : b) {
    if (!std::binary_search(a.begin(), a.end(), w)) {
      return w.str() + std::string(" only in ") + b_name;
    }
  }
  return "sets equal";
}

std::vector<BinaryWord> sorted_vector(const std::set<BinaryWord>& words) {
  return {words.begin(), words.end()};
}

struct MultiplicityStats {
  std::uint64_t derivations = 0;
  std::uint64_t distinct = 0;
  std::uint64_t multi_words = 0;
  std::uint64_t max_multiplicity = 0;

  void absorb(const GenerationResult& g) {
    derivations += g.derivations;
    distinct += g.words.size();
    for (const auto& [w, count] : g.multiplicity) {
      if (count > 1) ++multi_words;
      max_multiplicity = std::max(max_multiplicity, count);
    }
  }

  std::string render() const {
    std::ostringstream os;
    os << "derivations=" << derivations << " distinct=" << distinct
       << " multi-derived=" << multi_words
       << " max-multiplicity=" << max_multiplicity;
    return os.str();
  }
};

}  // namespace

SuiteResult run_reference_examples(const SuiteOptions&) {
  Recorder rec("reference-examples");
  auto chk = [&](bool ok, const BinaryWord& p, const BinaryWord& w,
                 const std::string& expected, const std::string& got) {
    rec.check(ok, p.str(), w.str(), expected, got);
  };

  // Counting fixtures.
  {
    const auto p = BinaryWord::parse("0010");
    const auto w = BinaryWord::parse("0001010");
    chk(count_occurrences_formula(p, w) == 12, p, w, "count 12",
        count_occurrences_formula(p, w).str());
    chk(oracle::count_occurrences(p, w) == 12, p, w, "oracle count 12",
        oracle::count_occurrences(p, w).str());
  }
  {
    const auto p = BinaryWord::parse("010011010110");
    const auto w = BinaryWord::parse("011100110100110");
    chk(count_occurrences_formula(p, w) == 6, p, w, "count 6",
        count_occurrences_formula(p, w).str());
  }
  {
    const auto p = BinaryWord::parse("01");
    chk(count_occurrences_formula(p, p) == 1, p, p, "count 1",
        count_occurrences_formula(p, p).str());
    const auto w = BinaryWord::parse("0101");
    chk(count_occurrences_formula(p, w) == 3 &&
            oracle::count_occurrences(p, w) == 3,
        p, w, "count 3 on both routes",
        count_occurrences_formula(p, w).str() + "/" +
            oracle::count_occurrences(p, w).str());
  }

  // Run-calculus helper values on one fixed pair.
  {
    const auto p = BinaryWord::parse("110100");
    const auto w = BinaryWord::parse("011100110100110");
    const RunDecomposition pd = decompose(p);
    const RunDecomposition wd = decompose(w);
    auto ival = [&](bool ok, const std::string& what, long long got) {
      chk(ok, p, w, what, what + " got " + std::to_string(got));
    };
    ival(wd.run_index(3) == 2, "run-index(3)=2", wd.run_index(3));
    ival(same_parity_sum(wd, 4, 8) == 5, "sigma(4,8)=5",
         same_parity_sum(wd, 4, 8));
    ival(left_span(wd, 7, 4) == std::optional<int>(2), "lambda(7;4)=2",
         left_span(wd, 7, 4).value_or(-1));
    ival(right_span(wd, 2, 6) == std::optional<int>(2), "rho(2;6)=2",
         right_span(wd, 2, 6).value_or(-1));
    ival(alpha(pd, wd) == 2, "alpha=2", alpha(pd, wd));
    ival(zeta(pd, wd) == std::optional<RunId>(9), "zeta=9",
         zeta(pd, wd).value_or(-1));
    ival(wd.run(2).first == 2, "phi(B2)=2", wd.run(2).first);
    ival(wd.run(4).last == 8, "psi(B4)=8", wd.run(4).last);
    ival(same_parity_distance(w, 3, 13) == 6, "delta(3,13)=6",
         same_parity_distance(w, 3, 13));

    const std::vector<Position> want_occ = {2, 3, 5, 7, 9, 11};
    const auto occ = lexmin_occurrence(p, w);
    chk(occ && *occ == want_occ, p, w, "lexmin (2,3,5,7,9,11)",
        occ ? fmt_sequence(*occ) : "absent");
    const std::vector<RunId> want_heads = {2, 3, 4, 5};
    const auto heads = lexmin_heads(pd, wd);
    chk(heads && *heads == want_heads, p, w, "lexmin heads (2,3,4,5)",
        heads ? fmt_sequence(*heads) : "absent");

    chk(!is_lexmin_occurrence(p, w, {2, 3, 5, 7, 9, 12}), p, w,
        "(2,3,5,7,9,12) not lexmin", "claimed lexmin");
  }

  // Second helper pair: lexmin plus the nested range bounds.
  {
    const auto p = BinaryWord::parse("0011100011");
    const auto w = BinaryWord::parse("1001011101000111010");
    const RunDecomposition pd = decompose(p);
    const RunDecomposition wd = decompose(w);
    const std::vector<Position> want_occ = {2, 3, 4, 6, 7, 9, 11, 12, 14, 15};
    const auto occ = lexmin_occurrence(p, w);
    chk(occ && *occ == want_occ, p, w, "lexmin (2,3,4,6,7,9,11,12,14,15)",
        occ ? fmt_sequence(*occ) : "absent");
    const std::vector<RunId> want_heads = {2, 3, 6, 9};
    const auto heads = lexmin_heads(pd, wd);
    chk(heads && *heads == want_heads, p, w, "lexmin heads (2,3,6,9)",
        heads ? fmt_sequence(*heads) : "absent");
    chk(zeta(pd, wd) == std::optional<RunId>(11), p, w, "zeta=11",
        std::to_string(zeta(pd, wd).value_or(-1)));
    auto step = [&](RunId bound, int q) {
      return bound - 2 * left_span(wd, bound, q).value_or(100) - 1;
    };
    chk(same_parity_sum(wd, 9, 11) == 4, p, w, "sigma(9,11)=4",
        std::to_string(same_parity_sum(wd, 9, 11)));
    chk(step(11, 3) == 8, p, w, "step(11;3)=8", std::to_string(step(11, 3)));
    chk(same_parity_sum(wd, 6, 8) == 4, p, w, "sigma(6,8)=4",
        std::to_string(same_parity_sum(wd, 6, 8)));
    chk(step(8, 4) == 5, p, w, "step(8;4)=5", std::to_string(step(8, 4)));
    chk(same_parity_sum(wd, 3, 5) == 4, p, w, "sigma(3,5)=4",
        std::to_string(same_parity_sum(wd, 3, 5)));
    chk(step(5, 4) == 2, p, w, "step(5;4)=2", std::to_string(step(5, 4)));
    chk(same_parity_sum(wd, 2, 2) == 2, p, w, "sigma(2,2)=2",
        std::to_string(same_parity_sum(wd, 2, 2)));
  }

  // Third helper pair.
  {
    const auto p = BinaryWord::parse("1111000001");
    const auto w = BinaryWord::parse("101010011001010101011");
    const RunDecomposition pd = decompose(p);
    const RunDecomposition wd = decompose(w);
    chk(zeta(pd, wd) == std::optional<RunId>(17), p, w, "zeta=17",
        std::to_string(zeta(pd, wd).value_or(-1)));
    const std::vector<RunId> want_heads = {1, 8, 15};
    const auto heads = lexmin_heads(pd, wd);
    chk(heads && *heads == want_heads, p, w, "lexmin heads (1,8,15)",
        heads ? fmt_sequence(*heads) : "absent");
    auto step = [&](RunId bound, int q) {
      return bound - 2 * left_span(wd, bound, q).value_or(100) - 1;
    };
    chk(same_parity_sum(wd, 15, 17) == 3, p, w, "sigma(15,17)=3",
        std::to_string(same_parity_sum(wd, 15, 17)));
    chk(step(17, 2) == 16, p, w, "step(17;2)=16", std::to_string(step(17, 2)));
    chk(same_parity_sum(wd, 8, 16) == 6, p, w, "sigma(8,16)=6",
        std::to_string(same_parity_sum(wd, 8, 16)));
    chk(step(16, 6) == 7, p, w, "step(16;6)=7", std::to_string(step(16, 6)));
    chk(same_parity_sum(wd, 1, 7) == 5, p, w, "sigma(1,7)=5",
        std::to_string(same_parity_sum(wd, 1, 7)));
  }

  // Constructed containing word and its letter-location helpers.
  const auto p13 = BinaryWord::parse("0010000111011");
  const auto w26 = BinaryWord::parse("10100101011010101001100101");
  {
    const GenerationResult g =
        generate_containing_for_plan(p13, InsertionPlan{{0, 2, 1, 3, 4, 1, 2}});
    chk(g.words.count(w26) == 1, p13, w26, "plan (0,2,1,3,4,1,2) reaches word",
        "missing from construction");

    chk(nth_same_parity_left(w26, 18, 7) == std::optional<Position>(5), p13,
        w26, "llet(18,7)=5",
        std::to_string(nth_same_parity_left(w26, 18, 7).value_or(-1)));
    chk(nth_same_parity_right(w26, 11, 4) == std::optional<Position>(17), p13,
        w26, "rlet(11,4)=17",
        std::to_string(nth_same_parity_right(w26, 11, 4).value_or(-1)));
    chk(tail(w26, 19).str() == "01100101", p13, w26, "tail(19)=01100101",
        tail(w26, 19).str());

    const RunDecomposition pd = decompose(p13);
    const RunDecomposition wd = decompose(w26);
    const std::vector<RunId> want_heads = {6, 7, 14, 17, 18, 21};
    const auto heads = lexmax_heads(pd, wd);
    chk(heads && *heads == want_heads, p13, w26,
        "lexmax heads (21,18,17,14,7,6) rightmost-first",
        heads ? fmt_sequence(*heads) : "absent");
    if (heads) {
      const std::vector<Position> want_anchors = {7, 8, 16, 21, 23, 26};
      std::vector<Position> anchors;
      for (RunId h : *heads) anchors.push_back(wd.run(h).last);
      chk(anchors == want_anchors, p13, w26,
          "lexmax anchors (26,23,21,16,8,7) rightmost-first",
          fmt_sequence(anchors));
    }
  }

  // Primitivity verdicts.
  {
    const auto w1 = BinaryWord::parse("0101001010100110101");
    const auto w2 = BinaryWord::parse("00010010100101110011");
    const auto w3 = BinaryWord::parse("0001001000101110011");
    chk(!is_primitive(p13, w1), p13, w1, "not primitive", "primitive");
    chk(!is_primitive(p13, w2), p13, w2, "not primitive", "primitive");
    chk(is_primitive(p13, w3), p13, w3, "primitive", "not primitive");

    auto uncovered = [&](const BinaryWord& w) {
      std::vector<Position> out;
      const auto classes = classify_letters(p13, w);
      for (Position l = 1; l <= w.size(); ++l) {
        if (!classes[static_cast<std::size_t>(l)].covered) out.push_back(l);
      }
      return out;
    };
    chk(uncovered(w1) == std::vector<Position>({2, 7, 9, 12, 13, 18}), p13, w1,
        "uncovered (2,7,9,12,13,18)", fmt_sequence(uncovered(w1)));
    chk(uncovered(w2) == std::vector<Position>({9}), p13, w2, "uncovered (9)",
        fmt_sequence(uncovered(w2)));
    chk(reduce_to_primitive(p13, w2) ==
            BinaryWord::parse("0001001000101110011"),
        p13, w2, "reduces to the primitive word",
        reduce_to_primitive(p13, w2).str());
  }

  // Letter classification outcomes. The full uncovered set of the large
  // fixture pair, with its split into reasons, is pinned exactly.
  {
    const auto classes = classify_letters(p13, w26);
    std::vector<Position> uncovered;
    for (Position l = 1; l <= w26.size(); ++l) {
      if (!classes[static_cast<std::size_t>(l)].covered) uncovered.push_back(l);
    }
    chk(uncovered == std::vector<Position>({1, 3, 10, 11, 13, 18, 19, 25}),
        p13, w26, "uncovered (1,3,10,11,13,18,19,25)", fmt_sequence(uncovered));
    for (Position l : {10, 11, 13, 18, 19, 25}) {
      const auto& cls = classes[static_cast<std::size_t>(l)];
      chk(!cls.covered && cls.reason == LetterReason::middle_gap, p13, w26,
          "position " + std::to_string(l) + " middle-gap",
          reason_name(cls.reason));
    }
    for (Position l : {1, 3}) {
      const auto& cls = classes[static_cast<std::size_t>(l)];
      chk(!cls.covered && cls.reason == LetterReason::prefix_deficit, p13,
          w26, "position " + std::to_string(l) + " prefix-deficit",
          reason_name(cls.reason));
    }

    const auto wa = BinaryWord::parse("001000011011000111011");
    chk(classify_letters(p13, wa)[12].covered, p13, wa, "position 12 covered",
        "uncovered");
    const auto wb = BinaryWord::parse("001001001101000111011");
    chk(classify_letters(p13, wb)[6].covered, p13, wb, "position 6 covered",
        "uncovered");
  }

  // Constructed primitive word.
  {
    const auto p = BinaryWord::parse("110011100011");
    const auto target = BinaryWord::parse("11110011101001011");
    const GenerationResult g =
        generate_primitive_for_plan(p, InsertionPlan{{1, 1, 1, 0, 2}});
    chk(g.words.count(target) == 1, p, target,
        "plan (1,1,1,0,2) reaches word", "missing from construction");
  }

  // Completion fixtures around one primitive word.
  {
    const auto w15 = BinaryWord::parse("001000001111011");
    chk(count_occurrences_formula(p13, w15) == 20, p13, w15, "count 20",
        count_occurrences_formula(p13, w15).str());
    chk(is_primitive(p13, w15), p13, w15, "primitive", "not primitive");
    chk(completion_count(p13, w15, 15) == 1, p13, w15, "PC at 15 = 1",
        completion_count(p13, w15, 15).str());
    chk(completion_count(p13, w15, 16) == 7, p13, w15, "PC at 16 = 7",
        completion_count(p13, w15, 16).str());
    const auto one_more = enumerate_completions(p13, w15, 16);
    chk(one_more.size() == 7, p13, w15, "7 one-letter completions",
        std::to_string(one_more.size()));
    for (const BinaryWord& v : one_more) {
      chk(oracle::reduce(p13, v) == w15, p13, v, "reduces back", "does not");
    }
    chk(completion_count(p13, w15, 20) == 462, p13, w15, "PC at 20 = 462",
        completion_count(p13, w15, 20).str());
    const auto five_more = enumerate_completions(p13, w15, 20);
    chk(five_more.size() == 462, p13, w15, "462 five-letter completions",
        std::to_string(five_more.size()));
    std::set<BinaryWord> pool(five_more.begin(), five_more.end());
    for (const char* s :
         {"00100110100110110110", "10101000001100110101",
          "01101000001111010010"}) {
      const auto v = BinaryWord::parse(s);
      chk(pool.count(v) == 1, p13, v, "is a completion", "missing");
      chk(oracle::count_occurrences(p13, v) == 20, p13, v, "oracle count 20",
          oracle::count_occurrences(p13, v).str());
    }
  }

  // Small closed-form cases across the generation module.
  {
    const auto p01 = BinaryWord::parse("01");
    chk(generate_containing(p01, 4).words.size() == 11, p01, p01,
        "11 containing words at length 4",
        std::to_string(generate_containing(p01, 4).words.size()));
    const auto p0110 = BinaryWord::parse("0110");
    const auto only = generate_containing(p0110, 4).words;
    chk(only.size() == 1 && only.count(p0110) == 1, p0110, p0110,
        "only the pattern at its own length", std::to_string(only.size()));

    const auto prim3 = sorted_vector(generate_primitive(p01, 3).words);
    const std::vector<BinaryWord> want3 = {BinaryWord::parse("001"),
                                           BinaryWord::parse("011")};
    chk(prim3 == want3, p01, p01, "primitive words 001,011 at length 3",
        std::to_string(prim3.size()) + " words");
    chk(generate_primitive(BinaryWord::parse("010"), 5)
            .words.count(BinaryWord::parse("01010")) == 1,
        BinaryWord::parse("010"), BinaryWord::parse("01010"),
        "01010 reached", "missing");

    chk(primitive_set(p01, 3, 1) == std::vector<BinaryWord>{p01}, p01, p01,
        "primitive set k=1 is {01}",
        std::to_string(primitive_set(p01, 3, 1).size()) + " words");
    chk(primitive_set(p01, 3, 2) == want3, p01, p01,
        "primitive set k=2 is {001,011}",
        std::to_string(primitive_set(p01, 3, 2).size()) + " words");
    chk(solve_primitive_equation(p01, 3, 2) == want3, p01, p01,
        "equation solutions k=2 are {001,011}",
        std::to_string(solve_primitive_equation(p01, 3, 2).size()) + " words");
    chk(solve_primitive_equation(p01, 3, 5).empty(), p01, p01,
        "no solutions for k=5",
        std::to_string(solve_primitive_equation(p01, 3, 5).size()) + " words");

    const auto comp = enumerate_completions(p01, p01, 3);
    const std::vector<BinaryWord> want_comp = {BinaryWord::parse("010"),
                                               BinaryWord::parse("101")};
    chk(comp == want_comp && completion_count(p01, p01, 3) == 2, p01, p01,
        "completions at 3 are 010,101",
        std::to_string(comp.size()) + " words");

    const auto p00 = BinaryWord::parse("00");
    const auto w000 = BinaryWord::parse("000");
    chk(completion_count(p00, w000, 4) == 4 &&
            enumerate_completions(p00, w000, 4).size() == 4,
        p00, w000, "4 completions at length 4",
        completion_count(p00, w000, 4).str());
    const auto pwide = BinaryWord::parse("011110");
    chk(completion_count(pwide, pwide, 7) == 5, pwide, pwide,
        "5 completions at length 7", completion_count(pwide, pwide, 7).str());

    chk(census_primitive(p01, 3, 1) == 2, p01, p01, "census k=1 is 2",
        census_primitive(p01, 3, 1).str());
    chk(census_primitive(p01, 3, 2) == 2, p01, p01, "census k=2 is 2",
        census_primitive(p01, 3, 2).str());
    const std::map<Count, Count> want_census = {
        {Count(0), Count(4)}, {Count(1), Count(2)}, {Count(2), Count(2)}};
    chk(census_distribution(p01, 3) == want_census, p01, p01,
        "census {0:4,1:2,2:2}", fmt_table(census_distribution(p01, 3)));
    chk(oracle::census_table(p01, 3) == want_census, p01, p01,
        "oracle census {0:4,1:2,2:2}", fmt_table(oracle::census_table(p01, 3)));

    const auto p0 = BinaryWord::parse("0");
    const std::map<Count, Count> want_one = {{Count(0), Count(1)},
                                             {Count(1), Count(1)}};
    chk(census_distribution(p0, 1) == want_one, p0, p0, "census {0:1,1:1}",
        fmt_table(census_distribution(p0, 1)));
    const std::map<Count, Count> want_two = {
        {Count(0), Count(1)}, {Count(1), Count(2)}, {Count(2), Count(1)}};
    chk(census_distribution(p0, 2) == want_two, p0, p0, "census {0:1,1:2,2:1}",
        fmt_table(census_distribution(p0, 2)));

    chk(is_lexmin_occurrence(p01, BinaryWord::parse("001"), {1, 3}), p01,
        BinaryWord::parse("001"), "(1,3) is lexmin", "rejected");
    chk(!is_lexmin_occurrence(p01, BinaryWord::parse("001"), {2, 3}), p01,
        BinaryWord::parse("001"), "(2,3) not lexmin", "accepted");
    chk(!is_lexmin_occurrence(p01, BinaryWord::parse("0011"), {2, 3}), p01,
        BinaryWord::parse("0011"), "(2,3) not lexmin", "accepted");
  }

  return rec.finish();
}

SuiteResult run_count_agreement(const SuiteOptions& options) {
  Recorder rec("count-agreement");
  std::function<Count(const BinaryWord&, const BinaryWord&)> counter =
      options.count_override;
  if (!counter) counter = count_occurrences_formula;

  const auto patterns = patterns_up_to(options.count_pattern_max);
  std::uint64_t pairs = 0;
  for (const BinaryWord& p : patterns) {
    for (int wlen = 1; wlen <= options.count_word_max; ++wlen) {
      for (const BinaryWord& w : words_of_length(wlen)) {
        const Count got = counter(p, w);
        const Count want(oracle::count_occurrences_u64(p, w));
        rec.check(got == want, p.str(), w.str(), want.str(), got.str());
        ++pairs;
      }
    }
  }
  std::ostringstream note;
  note << "patterns=" << patterns.size() << " pairs=" << pairs;
  rec.note(note.str());
  return rec.finish();
}

SuiteResult run_extremal_agreement(const SuiteOptions& options) {
  Recorder rec("extremal-agreement");
  for (const BinaryWord& p : patterns_up_to(options.extremal_pattern_max)) {
    const RunDecomposition pd = decompose(p);
    const int m = p.size();
    for (int wlen = 1; wlen <= options.extremal_word_max; ++wlen) {
      for (const BinaryWord& w : words_of_length(wlen)) {
        const RunDecomposition wd = decompose(w);
        const auto occs = oracle::enumerate_occurrences(p, w);
        const auto smin = lexmin_occurrence(p, w);
        const auto smax = lexmax_occurrence(p, w);
        if (occs.empty()) {
          rec.check(!smin && !smax && !lexmin_heads(pd, wd) &&
                        !lexmax_heads(pd, wd),
                    p.str(), w.str(), "no occurrence reported",
                    "structural route found one");
          continue;
        }
        std::vector<Position> cmin(occs.front());
        std::vector<Position> cmax(occs.front());
        for (const auto& occ : occs) {
          for (int i = 0; i < m; ++i) {
            cmin[static_cast<std::size_t>(i)] = std::min(
                cmin[static_cast<std::size_t>(i)],
                occ[static_cast<std::size_t>(i)]);
            cmax[static_cast<std::size_t>(i)] = std::max(
                cmax[static_cast<std::size_t>(i)],
                occ[static_cast<std::size_t>(i)]);
          }
        }
        const auto omin = oracle::lexmin_occurrence(p, w);
        const auto omax = oracle::lexmax_occurrence(p, w);
        rec.check(smin && *smin == cmin && omin && *omin == cmin, p.str(),
                  w.str(), "lexmin " + fmt_sequence(cmin),
                  smin ? fmt_sequence(*smin) : "absent");
        rec.check(smax && *smax == cmax && omax && *omax == cmax, p.str(),
                  w.str(), "lexmax " + fmt_sequence(cmax),
                  smax ? fmt_sequence(*smax) : "absent");
        if (!smin) continue;
        for (const auto& occ : occs) {
          const bool want = occ == *smin;
          const bool got = is_lexmin_occurrence(p, w, occ);
          rec.check(got == want, p.str(), w.str(),
                    fmt_sequence(occ) + (want ? " is lexmin" : " not lexmin"),
                    got ? "accepted" : "rejected");
        }
      }
    }
  }
  return rec.finish();
}

SuiteResult run_classification_agreement(const SuiteOptions& options) {
  Recorder rec("classification-agreement");
  for (const BinaryWord& p :
       patterns_up_to(options.classification_pattern_max)) {
    for (int wlen = 1; wlen <= options.classification_word_max; ++wlen) {
      for (const BinaryWord& w : words_of_length(wlen)) {
        if (!oracle::occurs(p, w)) continue;
        const auto covered = oracle::covered_positions(p, w);
        const auto classes = classify_letters(p, w);
        for (Position l = 1; l <= w.size(); ++l) {
          const bool want = covered[static_cast<std::size_t>(l)];
          const auto& cls = classes[static_cast<std::size_t>(l)];
          rec.check(cls.covered == want, p.str(), w.str(),
                    "position " + std::to_string(l) +
                        (want ? " covered" : " uncovered"),
                    std::string(cls.covered ? "covered" : "uncovered") + " (" +
                        reason_name(cls.reason) + ")");
        }
      }
    }
  }
  return rec.finish();
}

SuiteResult run_containing_generation(const SuiteOptions& options) {
  Recorder rec("containing-generation");
  MultiplicityStats stats;
  for (const BinaryWord& p : patterns_up_to(options.generation_pattern_max)) {
    for (int n = p.size(); n <= options.generation_length_max; ++n) {
      const GenerationResult g = generate_containing(p, n);
      stats.absorb(g);
      const auto got = sorted_vector(g.words);
      const auto want = oracle::containing_words(p, n);
      rec.check(got == want, p.str(), "length " + std::to_string(n),
                std::to_string(want.size()) + " containing words",
                std::to_string(got.size()) + " words; " +
                    first_difference(got, want, "construction", "oracle"));
    }
  }
  rec.note(stats.render());
  return rec.finish();
}

SuiteResult run_primitive_generation(const SuiteOptions& options) {
  Recorder rec("primitive-generation");
  MultiplicityStats stats;
  for (const BinaryWord& p : patterns_up_to(options.generation_pattern_max)) {
    for (int n = p.size(); n <= options.generation_length_max; ++n) {
      const GenerationResult g = generate_primitive(p, n);
      stats.absorb(g);
      const auto got = sorted_vector(g.words);
      const auto want = oracle::primitive_words(p, n);
      rec.check(got == want, p.str(), "length " + std::to_string(n),
                std::to_string(want.size()) + " primitive words",
                std::to_string(got.size()) + " words; " +
                    first_difference(got, want, "construction", "oracle"));
    }
  }
  rec.note(stats.render());
  return rec.finish();
}

SuiteResult run_completion_partition(const SuiteOptions& options) {
  Recorder rec("completion-partition");
  const int cap = 12;
  for (const BinaryWord& p : patterns_up_to(options.completion_pattern_max)) {
    const int m = p.size();
    std::vector<BinaryWord> prims;
    for (int len = m; len <= options.completion_word_max; ++len) {
      for (BinaryWord& w : oracle::primitive_words(p, len)) {
        prims.push_back(std::move(w));
      }
    }
    const std::set<BinaryWord> prim_lookup(prims.begin(), prims.end());

    const int target_max =
        std::min(options.completion_word_max + options.completion_insert_max,
                 cap);
    for (int target = m; target <= target_max; ++target) {
      // Reduction preimages among all words of the target length whose
      // primitive core falls inside the sweep.
      std::map<BinaryWord, std::set<BinaryWord>> preimage;
      for (const BinaryWord& v : words_of_length(target)) {
        if (!oracle::occurs(p, v)) continue;
        BinaryWord red = oracle::reduce(p, v);
        if (red.size() <= options.completion_word_max) {
          rec.check(prim_lookup.count(red) == 1, p.str(), v.str(),
                    "reduction is primitive", "core " + red.str() +
                        " missing from the primitive sweep");
          preimage[std::move(red)].insert(v);
        }
      }
      for (const BinaryWord& w : prims) {
        if (w.size() > target ||
            target > w.size() + options.completion_insert_max) {
          continue;
        }
        const auto list = enumerate_completions(p, w, target);
        const std::set<BinaryWord> got(list.begin(), list.end());
        const Count pc = completion_count(p, w, target);
        rec.check(pc == list.size(), p.str(), w.str(),
                  "count matches " + std::to_string(list.size()) +
                      " enumerated completions",
                  pc.str());
        auto it = preimage.find(w);
        const std::set<BinaryWord> want =
            it == preimage.end() ? std::set<BinaryWord>{} : it->second;
        if (got != want) {
          const auto gv = sorted_vector(got);
          const auto wv = sorted_vector(want);
          rec.check(false, p.str(), w.str(),
                    std::to_string(want.size()) + " preimages at length " +
                        std::to_string(target),
                    std::to_string(got.size()) + " completions; " +
                        first_difference(gv, wv, "completions", "preimages"));
        } else {
          rec.check(true, p.str(), w.str(), "", "");
        }
        if (it != preimage.end()) preimage.erase(it);
      }
      // Whatever preimage classes remain must belong to cores whose
      // insertion span ended before this target length.
      for (const auto& [red, members] : preimage) {
        rec.check(target > red.size() + options.completion_insert_max,
                  p.str(), red.str(),
                  "class outside the insertion sweep",
                  std::to_string(members.size()) +
                      " words left unmatched at length " +
                      std::to_string(target));
      }
    }
  }
  return rec.finish();
}

SuiteResult run_census_identity(const SuiteOptions& options) {
  Recorder rec("census-identity");
  for (const BinaryWord& p : patterns_up_to(options.census_pattern_max)) {
    for (int n = p.size(); n <= options.census_length_max; ++n) {
      const auto mine = census_distribution(p, n);
      const auto want = oracle::census_table(p, n);
      rec.check(mine == want, p.str(), "length " + std::to_string(n),
                fmt_table(want), fmt_table(mine));
      Count sum = 0;
      for (const auto& [k, v] : mine) sum += v;
      const Count total = Count(1) << n;
      rec.check(sum == total, p.str(), "length " + std::to_string(n),
                "totals " + total.str(), sum.str());
      if (n <= 8) {
        Count top = 0;
        for (const auto& [k, v] : want) {
          if (k > top) top = k;
          if (k < 1) continue;
          const Count got = census_primitive(p, n, k);
          rec.check(got == v, p.str(),
                    "length " + std::to_string(n) + " k=" + k.str(), v.str(),
                    got.str());
          rec.check(primitive_set(p, n, k) == solve_primitive_equation(p, n, k),
                    p.str(), "length " + std::to_string(n) + " k=" + k.str(),
                    "equation solutions match the primitive set", "mismatch");
        }
        const Count beyond_k = top + 1;
        const Count beyond = census_primitive(p, n, beyond_k);
        rec.check(beyond == 0, p.str(),
                  "length " + std::to_string(n) + " k=" + beyond_k.str(), "0",
                  beyond.str());
      }
    }
  }
  return rec.finish();
}

Report run_all(const SuiteOptions& options) {
  Report report;
  report.suites.push_back(run_reference_examples(options));
  report.suites.push_back(run_count_agreement(options));
  report.suites.push_back(run_extremal_agreement(options));
  report.suites.push_back(run_classification_agreement(options));
  report.suites.push_back(run_containing_generation(options));
  report.suites.push_back(run_primitive_generation(options));
  report.suites.push_back(run_completion_partition(options));
  report.suites.push_back(run_census_identity(options));
  report.all_passed = true;
  for (const SuiteResult& suite : report.suites) {
    report.all_passed = report.all_passed && suite.passed;
  }
  return report;
}

}  // namespace subwords::verify
