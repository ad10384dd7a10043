// Acceptance gate: one line per criterion, PASS/FAIL, exit 0 only when
// every criterion holds. Criteria 1-8 are the verification suites at
// their full default bounds; criterion 9 drives the command-line tool and
// checks determinism and lossless round-trips of its table and word-list
// output. Needs the tool's path as argv[1].
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "subwords/generation.hpp"
#include "subwords/io.hpp"
#include "subwords/verify.hpp"

namespace {

using subwords::BinaryWord;
using subwords::Count;

struct RunResult {
  std::string output;
  int status = -1;
};

RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int raw = pclose(pipe);
  if (raw >= 0 && WIFEXITED(raw)) result.status = WEXITSTATUS(raw);
  return result;
}

std::string format_seconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", seconds);
  return buf;
}

std::string compact(const std::string& text) {
  constexpr std::size_t kMax = 60;
  if (text.size() <= kMax) return text;
  return text.substr(0, kMax) + "...";
}

void print_suite_line(int criterion, const subwords::verify::SuiteResult& r) {
  std::ostringstream line;
  line << (r.passed ? "PASS" : "FAIL") << " criterion " << criterion << ": "
       << r.name << " cases=" << r.cases
       << " seconds=" << format_seconds(r.seconds);
  if (!r.passed && !r.counterexamples.empty()) {
    const auto& cx = r.counterexamples.front();
    line << " first pattern=" << compact(cx.pattern)
         << " word=" << compact(cx.word)
         << " expected=" << compact(cx.expected)
         << " got=" << compact(cx.got);
  }
  std::cout << line.str() << '\n';
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Runs one CLI invocation twice; both runs must exit 0 and print
// byte-identical output. Returns the shared output.
bool run_twice(const std::string& command, std::string& output,
               std::string& why) {
  const RunResult first = run_command(command);
  const RunResult second = run_command(command);
  if (first.status != 0 || second.status != 0) {
    why = "nonzero exit from: " + command;
    return false;
  }
  if (first.output != second.output) {
    why = "two runs differ for: " + command;
    return false;
  }
  if (first.output.empty()) {
    why = "no output from: " + command;
    return false;
  }
  output = first.output;
  return true;
}

bool check_cli(const std::string& cli, int& checks, std::string& why) {
  std::string out;

  // Census as CSV: stable bytes and a lossless read-back.
  if (!run_twice(cli + " table -p 01 -n 10 --format csv", out, why)) {
    return false;
  }
  ++checks;
  {
    std::istringstream in(out);
    const auto parsed = subwords::io::read_census_csv(in);
    const auto direct =
        subwords::census_distribution(BinaryWord::parse("01"), 10);
    if (parsed != direct) {
      why = "CSV census read-back differs from the library table";
      return false;
    }
    ++checks;
  }

  // Census as b-file lines.
  if (!run_twice(cli + " table -p 011 -n 9 --format bfile", out, why)) {
    return false;
  }
  ++checks;
  {
    std::istringstream in(out);
    const auto parsed = subwords::io::read_census_bfile(in);
    const auto direct =
        subwords::census_distribution(BinaryWord::parse("011"), 9);
    if (parsed != direct) {
      why = "b-file census read-back differs from the library table";
      return false;
    }
    ++checks;
  }

  // Census as JSON: every key and value survives as a decimal string.
  if (!run_twice(cli + " table -p 01 -n 8 --format json", out, why)) {
    return false;
  }
  ++checks;
  {
    const auto doc = nlohmann::json::parse(out, nullptr, false);
    if (doc.is_discarded() || !doc.contains("table")) {
      why = "table JSON did not parse";
      return false;
    }
    const auto direct =
        subwords::census_distribution(BinaryWord::parse("01"), 8);
    std::map<Count, Count> parsed;
    for (const auto& [key, value] : doc["table"].items()) {
      parsed[Count(key)] = Count(value.get<std::string>());
    }
    if (parsed != direct) {
      why = "JSON census differs from the library table";
      return false;
    }
    ++checks;
  }

  // Word-list generation: stable bytes, and the exact constructive set.
  if (!run_twice(cli + " generate -p 010 -n 9", out, why)) return false;
  ++checks;
  {
    const auto lines = split_lines(out);
    const auto direct =
        subwords::generate_containing(BinaryWord::parse("010"), 9);
    std::vector<std::string> expected;
    for (const BinaryWord& w : direct.words) expected.push_back(w.str());
    std::vector<std::string> got(lines.begin(), lines.end());
    if (got != expected) {
      why = "generated word list differs from the library set";
      return false;
    }
    ++checks;
  }

  if (!run_twice(cli + " generate -p 01 -n 4", out, why)) return false;
  ++checks;
  if (split_lines(out).size() != 11) {
    why = "expected 11 words of length 4 containing 01";
    return false;
  }
  ++checks;
  return true;
}

void write_multiplicity_report(const subwords::verify::Report& report) {
  std::ofstream out("multiplicity_report.txt");
  if (!out) return;
  out << "Derivation multiplicity across the constructive sweeps\n";
  for (const auto& suite : report.suites) {
    if (suite.name == "containing-generation" ||
        suite.name == "primitive-generation") {
      out << suite.name << ": " << suite.note << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  const auto report = subwords::verify::run_all();
  bool all_passed = report.all_passed;
  int criterion = 1;
  for (const auto& suite : report.suites) {
    print_suite_line(criterion, suite);
    ++criterion;
  }
  write_multiplicity_report(report);

  const auto start = std::chrono::steady_clock::now();
  int checks = 0;
  std::string why;
  bool cli_ok = false;
  if (argc > 1) {
    cli_ok = check_cli(std::string("\"") + argv[1] + "\"", checks, why);
  } else {
    why = "tool path missing (pass it as the first argument)";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << (cli_ok ? "PASS" : "FAIL") << " criterion " << criterion
            << ": cli-determinism-roundtrip checks=" << checks
            << " seconds=" << format_seconds(seconds);
  if (!cli_ok) std::cout << " reason: " << why;
  std::cout << '\n';

  all_passed = all_passed && cli_ok;
  return all_passed ? 0 : 1;
}
