#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subwords/generation.hpp"
#include "subwords/io.hpp"
#include "subwords/limits.hpp"
#include "subwords/occurrence.hpp"
#include "subwords/oracle.hpp"
#include "subwords/verify.hpp"
#include "subwords/word.hpp"

namespace {

using subwords::BinaryWord;
using subwords::Count;
using subwords::Position;
using json = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct Args {
  std::string pattern;
  std::string word;
  std::string seed_file;
  std::string output;
  std::string method = "formula";
  std::string format = "text";
  std::string k;
  int n = 0;
  int target = 0;
  int bound = 0;
  int max_p = 0;
  int max_n = 0;
  bool primitive = false;
  bool exact = false;
  bool allow_large = false;
};

Count parse_k(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("missing occurrence count");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("occurrence count must be a nonnegative "
                                  "decimal integer, got '" + text + "'");
    }
  }
  return Count(text);
}

// The words a command operates on: either the single -w argument or the
// contents of --seed-file, never both.
std::vector<BinaryWord> input_words(const Args& args) {
  if (!args.word.empty() && !args.seed_file.empty()) {
    throw std::invalid_argument("give either --word or --seed-file, not both");
  }
  if (!args.word.empty()) return {BinaryWord::parse(args.word)};
  if (!args.seed_file.empty()) {
    auto words = subwords::io::read_word_list_file(args.seed_file);
    if (words.empty()) {
      throw std::invalid_argument("seed file holds no words");
    }
    return words;
  }
  throw std::invalid_argument("a word is required (--word or --seed-file)");
}

void refuse_above_bound(int n, const Args& args, const char* what) {
  const int bound =
      args.bound > 0 ? args.bound : subwords::exhaustive_bound();
  if (n > bound && !args.allow_large) {
    throw subwords::BoundExceeded(
        std::string(what) + " at length " + std::to_string(n) +
        " exceeds the exhaustive bound " + std::to_string(bound) +
        " (pass --allow-large to override)");
  }
}

// Output sink: -o writes a file, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string join_positions(const std::vector<Position>& positions) {
  std::string out;
  for (Position pos : positions) {
    if (!out.empty()) out += ' ';
    out += std::to_string(pos);
  }
  return out.empty() ? "none" : out;
}

json positions_to_json(const std::optional<std::vector<Position>>& occ) {
  if (!occ) return nullptr;
  json arr = json::array();
  for (Position pos : *occ) arr.push_back(pos);
  return arr;
}

json table_to_json(const std::map<Count, Count>& table) {
  json obj = json::object();
  for (const auto& [k, v] : table) obj[k.str()] = v.str();
  return obj;
}

void emit(Sink& sink, const json& payload) {
  sink.stream() << payload.dump(2) << '\n';
}

int run_count(const Args& args) {
  const auto p = BinaryWord::parse(args.pattern);
  const auto words = input_words(args);
  Sink sink(args.output);
  json all = json::array();
  bool mismatch = false;
  for (const BinaryWord& w : words) {
    std::optional<Count> formula;
    std::optional<Count> oracle_count;
    if (args.method != "oracle") {
      formula = subwords::count_occurrences_formula(p, w);
    }
    if (args.method != "formula") {
      oracle_count = subwords::oracle::count_occurrences(p, w);
    }
    const Count& value = formula ? *formula : *oracle_count;
    const bool agree = !formula || !oracle_count || *formula == *oracle_count;
    mismatch = mismatch || !agree;

    if (args.format == "json") {
      json row = {{"pattern", p.str()},
                  {"word", w.str()},
                  {"count", value.str()},
                  {"method", args.method}};
      if (args.method == "both") {
        row["oracle_count"] = oracle_count->str();
        row["agreement"] = agree;
      }
      all.push_back(row);
    } else if (args.method == "both") {
      if (words.size() > 1) sink.stream() << w.str() << ' ';
      sink.stream() << "formula " << *formula << '\n';
      if (words.size() > 1) sink.stream() << w.str() << ' ';
      sink.stream() << "oracle " << *oracle_count << '\n';
      if (words.size() > 1) sink.stream() << w.str() << ' ';
      sink.stream() << "agreement " << (agree ? "true" : "false") << '\n';
    } else if (words.size() > 1) {
      sink.stream() << w.str() << ' ' << value << '\n';
    } else {
      sink.stream() << value << '\n';
    }
  }
  if (args.format == "json") {
    emit(sink, words.size() == 1 ? all.front() : all);
  }
  return mismatch ? kExitMismatch : kExitSuccess;
}

int run_extreme(const Args& args, bool minimal) {
  const auto p = BinaryWord::parse(args.pattern);
  const auto words = input_words(args);
  Sink sink(args.output);
  json all = json::array();
  bool mismatch = false;
  for (const BinaryWord& w : words) {
    std::optional<std::vector<Position>> structural;
    std::optional<std::vector<Position>> reference;
    if (args.method != "oracle") {
      structural = minimal ? subwords::lexmin_occurrence(p, w)
                           : subwords::lexmax_occurrence(p, w);
    }
    if (args.method != "formula") {
      reference = minimal ? subwords::oracle::lexmin_occurrence(p, w)
                          : subwords::oracle::lexmax_occurrence(p, w);
    }
    const auto& shown = args.method == "oracle" ? reference : structural;
    const bool agree = args.method != "both" || structural == reference;
    mismatch = mismatch || !agree;

    if (args.format == "json") {
      json row = {{"pattern", p.str()},
                  {"word", w.str()},
                  {"occurrence", positions_to_json(shown)},
                  {"method", args.method}};
      if (args.method == "both") row["agreement"] = agree;
      all.push_back(row);
    } else {
      if (words.size() > 1) sink.stream() << w.str() << ' ';
      sink.stream() << (shown ? join_positions(*shown) : "none");
      if (args.method == "both") {
        sink.stream() << " agreement " << (agree ? "true" : "false");
      }
      sink.stream() << '\n';
    }
  }
  if (args.format == "json") {
    emit(sink, words.size() == 1 ? all.front() : all);
  }
  return mismatch ? kExitMismatch : kExitSuccess;
}

const char* reason_text(subwords::LetterReason reason) {
  switch (reason) {
    case subwords::LetterReason::in_extreme: return "in-extreme";
    case subwords::LetterReason::bridged: return "bridged";
    case subwords::LetterReason::middle_gap: return "middle-gap";
    case subwords::LetterReason::prefix_deficit: return "prefix-deficit";
    case subwords::LetterReason::suffix_deficit: return "suffix-deficit";
  }
  return "?";
}

int run_classify(const Args& args) {
  const auto p = BinaryWord::parse(args.pattern);
  const auto words = input_words(args);
  Sink sink(args.output);
  json all = json::array();
  bool mismatch = false;
  for (const BinaryWord& w : words) {
    const auto classes = subwords::classify_letters(p, w);
    std::vector<bool> reference;
    if (args.method != "formula") {
      reference = subwords::oracle::covered_positions(p, w);
    }
    bool agree = true;
    if (args.method == "both") {
      for (Position l = 1; l <= w.size(); ++l) {
        agree = agree && classes[static_cast<std::size_t>(l)].covered ==
                             reference[static_cast<std::size_t>(l)];
      }
    }
    mismatch = mismatch || !agree;

    if (args.format == "json") {
      json letters = json::array();
      for (Position l = 1; l <= w.size(); ++l) {
        const auto& cls = classes[static_cast<std::size_t>(l)];
        letters.push_back({{"position", l},
                           {"letter", w.at(l)},
                           {"covered", cls.covered},
                           {"reason", reason_text(cls.reason)}});
      }
      json row = {{"pattern", p.str()},
                  {"word", w.str()},
                  {"letters", letters},
                  {"method", args.method}};
      if (args.method == "both") row["agreement"] = agree;
      all.push_back(row);
    } else {
      if (words.size() > 1) sink.stream() << "# " << w.str() << '\n';
      for (Position l = 1; l <= w.size(); ++l) {
        const auto& cls = classes[static_cast<std::size_t>(l)];
        sink.stream() << l << ' ' << w.at(l) << ' '
                      << (cls.covered ? "covered" : "uncovered") << ' '
                      << reason_text(cls.reason) << '\n';
      }
      if (args.method == "both") {
        sink.stream() << "agreement " << (agree ? "true" : "false") << '\n';
      }
    }
  }
  if (args.format == "json") {
    emit(sink, words.size() == 1 ? all.front() : all);
  }
  return mismatch ? kExitMismatch : kExitSuccess;
}

int emit_word_list(const Args& args, const std::vector<BinaryWord>& mine,
                   const std::vector<BinaryWord>& reference, json meta) {
  Sink sink(args.output);
  const auto& shown = args.method == "oracle" ? reference : mine;
  const bool agree = args.method != "both" || mine == reference;
  if (args.format == "json") {
    json arr = json::array();
    for (const BinaryWord& w : shown) arr.push_back(w.str());
    meta["words"] = arr;
    meta["method"] = args.method;
    if (args.method == "both") meta["agreement"] = agree;
    emit(sink, meta);
  } else {
    subwords::io::write_word_list(sink.stream(), shown);
    if (args.method == "both") {
      sink.stream() << "# agreement " << (agree ? "true" : "false") << '\n';
    }
  }
  return agree ? kExitSuccess : kExitMismatch;
}

int run_generate(const Args& args) {
  const auto p = BinaryWord::parse(args.pattern);
  if (args.n < p.size()) {
    throw std::invalid_argument("length must be at least the pattern length");
  }
  refuse_above_bound(args.n, args, "generation");
  std::vector<BinaryWord> mine;
  std::vector<BinaryWord> reference;
  if (args.method != "oracle") {
    const auto g = args.primitive ? subwords::generate_primitive(p, args.n)
                                  : subwords::generate_containing(p, args.n);
    mine.assign(g.words.begin(), g.words.end());
  }
  if (args.method != "formula") {
    reference = args.primitive
                    ? subwords::oracle::primitive_words(p, args.n)
                    : subwords::oracle::containing_words(p, args.n);
  }
  json meta = {{"pattern", p.str()},
               {"n", args.n},
               {"primitive", args.primitive}};
  return emit_word_list(args, mine, reference, std::move(meta));
}

int run_primitives(const Args& args) {
  const auto p = BinaryWord::parse(args.pattern);
  if (args.n < p.size()) {
    throw std::invalid_argument("length must be at least the pattern length");
  }
  refuse_above_bound(args.n, args, "primitive enumeration");
  std::optional<Count> k;
  if (!args.k.empty()) k = parse_k(args.k);

  const int first = args.exact ? args.n : p.size();
  std::vector<BinaryWord> mine;
  std::vector<BinaryWord> reference;
  for (int len = first; len <= args.n; ++len) {
    if (args.method != "oracle") {
      for (const BinaryWord& w : subwords::generate_primitive(p, len).words) {
        if (!k || subwords::count_occurrences_formula(p, w) == *k) {
          mine.push_back(w);
        }
      }
    }
    if (args.method != "formula") {
      for (BinaryWord& w : subwords::oracle::primitive_words(p, len)) {
        if (!k || subwords::oracle::count_occurrences(p, w) == *k) {
          reference.push_back(std::move(w));
        }
      }
    }
  }
  json meta = {{"pattern", p.str()}, {"n", args.n}, {"exact", args.exact}};
  if (k) meta["k"] = k->str();
  return emit_word_list(args, mine, reference, std::move(meta));
}

int run_complete(const Args& args) {
  const auto p = BinaryWord::parse(args.pattern);
  const auto words = input_words(args);
  refuse_above_bound(args.target, args, "completion enumeration");
  Sink sink(args.output);
  json all = json::array();
  bool mismatch = false;
  for (const BinaryWord& w : words) {
    if (args.target < w.size()) {
      throw std::invalid_argument(
          "target length must be at least the word length");
    }
    const auto mine = subwords::enumerate_completions(p, w, args.target);
    const Count pc = subwords::completion_count(p, w, args.target);
    bool agree = pc == mine.size();
    if (args.method == "both" || args.method == "oracle") {
      std::vector<BinaryWord> reference;
      for (std::uint64_t mask = 0;
           mask < (std::uint64_t{1} << args.target); ++mask) {
        BinaryWord v = BinaryWord::from_mask(args.target, mask);
        if (subwords::oracle::occurs(p, v) &&
            subwords::oracle::reduce(p, v) == w) {
          reference.push_back(std::move(v));
        }
      }
      agree = agree && mine == reference;
    }
    mismatch = mismatch || !agree;

    if (args.format == "json") {
      json arr = json::array();
      for (const BinaryWord& v : mine) arr.push_back(v.str());
      json row = {{"pattern", p.str()},
                  {"word", w.str()},
                  {"target", args.target},
                  {"count", pc.str()},
                  {"completions", arr},
                  {"method", args.method}};
      if (args.method == "both") row["agreement"] = agree;
      all.push_back(row);
    } else {
      if (words.size() > 1) sink.stream() << "# " << w.str() << '\n';
      subwords::io::write_word_list(sink.stream(), mine);
      if (args.method == "both") {
        sink.stream() << "# agreement " << (agree ? "true" : "false") << '\n';
      }
    }
  }
  if (args.format == "json") {
    emit(sink, words.size() == 1 ? all.front() : all);
  }
  return mismatch ? kExitMismatch : kExitSuccess;
}

int run_bnpk(const Args& args) {
  const auto p = BinaryWord::parse(args.pattern);
  const Count k = parse_k(args.k);
  refuse_above_bound(args.n, args, "census");
  std::optional<Count> structural;
  std::optional<Count> reference;
  if (args.method != "oracle") {
    if (k == 0) {
      const auto table = subwords::census_distribution(p, args.n);
      const auto it = table.find(Count(0));
      structural = it == table.end() ? Count(0) : it->second;
    } else {
      structural = subwords::census_primitive(p, args.n, k);
    }
  }
  if (args.method != "formula") {
    const auto table = subwords::oracle::census_table(p, args.n);
    const auto it = table.find(k);
    reference = it == table.end() ? Count(0) : it->second;
  }
  const Count& value = structural ? *structural : *reference;
  const bool agree =
      !structural || !reference || *structural == *reference;

  Sink sink(args.output);
  if (args.format == "json") {
    json row = {{"pattern", p.str()},
                {"n", args.n},
                {"k", k.str()},
                {"value", value.str()},
                {"method", args.method}};
    if (args.method == "both") {
      row["oracle_value"] = reference->str();
      row["agreement"] = agree;
    }
    emit(sink, row);
  } else if (args.method == "both") {
    sink.stream() << "formula " << *structural << '\n'
                  << "oracle " << *reference << '\n'
                  << "agreement " << (agree ? "true" : "false") << '\n';
  } else {
    sink.stream() << value << '\n';
  }
  return agree ? kExitSuccess : kExitMismatch;
}

int run_table(const Args& args) {
  const auto p = BinaryWord::parse(args.pattern);
  refuse_above_bound(args.n, args, "census");
  std::map<Count, Count> structural;
  std::map<Count, Count> reference;
  if (args.method != "oracle") {
    structural = subwords::census_distribution(p, args.n);
  }
  if (args.method != "formula") {
    reference = subwords::oracle::census_table(p, args.n);
  }
  const auto& shown = args.method == "oracle" ? reference : structural;
  const bool agree = args.method != "both" || structural == reference;

  Sink sink(args.output);
  if (args.format == "json") {
    json row = {{"pattern", p.str()},
                {"n", args.n},
                {"table", table_to_json(shown)},
                {"method", args.method}};
    if (args.method == "both") row["agreement"] = agree;
    emit(sink, row);
  } else if (args.format == "csv") {
    if (args.method == "both") {
      sink.stream() << "k,count,agreement\n";
      for (const auto& [k, v] : shown) {
        const auto it = reference.find(k);
        const bool row_ok = it != reference.end() && it->second == v;
        sink.stream() << k << ',' << v << ','
                      << (row_ok ? "true" : "false") << '\n';
      }
    } else {
      subwords::io::write_census_csv(sink.stream(), shown);
    }
  } else if (args.format == "bfile") {
    subwords::io::write_census_bfile(sink.stream(), shown);
    if (args.method == "both") {
      sink.stream() << "# agreement " << (agree ? "true" : "false") << '\n';
    }
  } else {
    for (const auto& [k, v] : shown) {
      sink.stream() << k << ": " << v << '\n';
    }
    if (args.method == "both") {
      sink.stream() << "agreement " << (agree ? "true" : "false") << '\n';
    }
  }
  return agree ? kExitSuccess : kExitMismatch;
}

int run_verify(const Args& args) {
  subwords::verify::SuiteOptions options;
  if (args.max_p > 0) {
    options.count_pattern_max = std::min(options.count_pattern_max, args.max_p);
    options.extremal_pattern_max =
        std::min(options.extremal_pattern_max, args.max_p);
    options.classification_pattern_max =
        std::min(options.classification_pattern_max, args.max_p);
    options.generation_pattern_max =
        std::min(options.generation_pattern_max, args.max_p);
    options.completion_pattern_max =
        std::min(options.completion_pattern_max, args.max_p);
    options.census_pattern_max =
        std::min(options.census_pattern_max, args.max_p);
  }
  if (args.max_n > 0) {
    options.count_word_max = std::min(options.count_word_max, args.max_n);
    options.extremal_word_max =
        std::min(options.extremal_word_max, args.max_n);
    options.classification_word_max =
        std::min(options.classification_word_max, args.max_n);
    options.generation_length_max =
        std::min(options.generation_length_max, args.max_n);
    options.completion_word_max =
        std::min(options.completion_word_max, args.max_n);
    options.census_length_max = std::min(options.census_length_max, args.max_n);
  }

  const auto report = subwords::verify::run_all(options);
  Sink sink(args.output);
  if (args.format == "json") {
    json suites = json::array();
    for (const auto& suite : report.suites) {
      json counterexamples = json::array();
      for (const auto& ce : suite.counterexamples) {
        counterexamples.push_back({{"suite", ce.suite},
                                   {"pattern", ce.pattern},
                                   {"word", ce.word},
                                   {"expected", ce.expected},
                                   {"got", ce.got}});
      }
      suites.push_back({{"name", suite.name},
                        {"passed", suite.passed},
                        {"cases", suite.cases},
                        {"seconds", suite.seconds},
                        {"note", suite.note},
                        {"counterexamples", counterexamples}});
    }
    emit(sink, json{{"all_passed", report.all_passed}, {"suites", suites}});
  } else {
    for (const auto& suite : report.suites) {
      sink.stream() << (suite.passed ? "PASS" : "FAIL") << ' ' << suite.name
                    << " cases=" << suite.cases;
      if (!suite.note.empty()) sink.stream() << " [" << suite.note << ']';
      sink.stream() << '\n';
      for (const auto& ce : suite.counterexamples) {
        sink.stream() << "  pattern=" << ce.pattern << " word=" << ce.word
                      << " expected=" << ce.expected << " got=" << ce.got
                      << '\n';
      }
    }
    sink.stream() << (report.all_passed ? "all suites passed"
                                        : "verification failed")
                  << '\n';
  }
  return report.all_passed ? kExitSuccess : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  CLI::App app{"Subword occurrence toolkit: counting, extreme occurrences, "
               "letter classification, word construction, completions, and "
               "census tables for binary patterns, with built-in "
               "verification against exhaustive reference routes."};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool with_word) {
    cmd->add_option("-p,--pattern", args.pattern, "binary pattern")
        ->required();
    if (with_word) {
      cmd->add_option("-w,--word", args.word, "binary word");
      cmd->add_option("--seed-file", args.seed_file,
                      "word-list file: one word per line, '#' comments");
    }
    cmd->add_option("--method", args.method,
                    "computation route: structural formula, exhaustive "
                    "oracle, or both with an agreement check")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    cmd->add_option("-o,--output", args.output, "write output to this file");
    cmd->add_flag("--allow-large", args.allow_large,
                  "run exhaustive work beyond the configured bound");
    cmd->add_option("--bound", args.bound,
                    "override the exhaustive-length bound");
    return cmd;
  };
  const auto add_format = [&](CLI::App* cmd,
                              const std::vector<std::string>& formats) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember(formats));
  };

  auto* count_cmd = add_common(app.add_subcommand("count",
      "number of occurrences of the pattern as a subword"), true);
  add_format(count_cmd, {"text", "json"});

  auto* lexmin_cmd = add_common(app.add_subcommand("lexmin",
      "lexicographically smallest occurrence"), true);
  add_format(lexmin_cmd, {"text", "json"});

  auto* lexmax_cmd = add_common(app.add_subcommand("lexmax",
      "lexicographically largest occurrence"), true);
  add_format(lexmax_cmd, {"text", "json"});

  auto* classify_cmd = add_common(app.add_subcommand("classify",
      "per-letter occurrence coverage with reasons"), true);
  add_format(classify_cmd, {"text", "json"});

  auto* generate_cmd = add_common(app.add_subcommand("generate",
      "all words of a given length containing the pattern"), false);
  generate_cmd->add_option("-n,--length", args.n, "word length")->required();
  generate_cmd->add_flag("--primitive", args.primitive,
                         "restrict to primitive words");
  add_format(generate_cmd, {"text", "json"});

  auto* primitives_cmd = add_common(app.add_subcommand("primitives",
      "primitive words up to a given length"), false);
  primitives_cmd->add_option("-n,--length", args.n, "maximum length")
      ->required();
  primitives_cmd->add_option("-k,--count", args.k,
                             "keep only words with this occurrence count");
  primitives_cmd->add_flag("--exact", args.exact,
                           "only words of exactly the given length");
  add_format(primitives_cmd, {"text", "json"});

  auto* complete_cmd = add_common(app.add_subcommand("complete",
      "extensions of a primitive word that add no occurrence"), true);
  complete_cmd
      ->add_option("-m,--target", args.target, "length to extend to")
      ->required();
  add_format(complete_cmd, {"text", "json"});

  auto* bnpk_cmd = add_common(app.add_subcommand("bnpk",
      "number of length-n words with exactly k occurrences"), false);
  bnpk_cmd->add_option("-n,--length", args.n, "word length")->required();
  bnpk_cmd->add_option("-k,--count", args.k, "occurrence count")->required();
  add_format(bnpk_cmd, {"text", "json"});

  auto* table_cmd = add_common(app.add_subcommand("table",
      "full census: words per occurrence count at a given length"), false);
  table_cmd->add_option("-n,--length", args.n, "word length")->required();
  add_format(table_cmd, {"text", "json", "csv", "bfile"});

  auto* verify_cmd = app.add_subcommand("verify",
      "run the oracle-agreement suites and report counterexamples");
  verify_cmd->add_option("--max-p", args.max_p,
                         "clamp pattern lengths in every suite");
  verify_cmd->add_option("--max-n", args.max_n,
                         "clamp word lengths in every suite");
  verify_cmd->add_option("-o,--output", args.output,
                         "write the report to this file");
  add_format(verify_cmd, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (app.got_subcommand(count_cmd)) return run_count(args);
    if (app.got_subcommand(lexmin_cmd)) return run_extreme(args, true);
    if (app.got_subcommand(lexmax_cmd)) return run_extreme(args, false);
    if (app.got_subcommand(classify_cmd)) return run_classify(args);
    if (app.got_subcommand(generate_cmd)) return run_generate(args);
    if (app.got_subcommand(primitives_cmd)) return run_primitives(args);
    if (app.got_subcommand(complete_cmd)) return run_complete(args);
    if (app.got_subcommand(bnpk_cmd)) return run_bnpk(args);
    if (app.got_subcommand(table_cmd)) return run_table(args);
    if (app.got_subcommand(verify_cmd)) return run_verify(args);
  } catch (const subwords::BoundExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
