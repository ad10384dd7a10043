#include "subwords/oracle.hpp"

#include <functional>
#include <stdexcept>

#include "subwords/limits.hpp"

namespace subwords::oracle {

namespace {

void require_pattern(const BinaryWord& p) {
  if (p.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
}

}  // namespace

Count count_occurrences(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  const int m = p.size();
  // table[j] = occurrences of p[1..j] in the scanned prefix of w.
  std::vector<Count> table(static_cast<std::size_t>(m) + 1);
  table[0] = 1;
  for (Position i = 1; i <= w.size(); ++i) {
    for (int j = m; j >= 1; --j) {
      if (p.at(j) == w.at(i)) {
        table[static_cast<std::size_t>(j)] +=
            table[static_cast<std::size_t>(j - 1)];
      }
    }
  }
  return table[static_cast<std::size_t>(m)];
}

std::uint64_t count_occurrences_u64(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  if (w.size() > 62) {
    throw std::invalid_argument(
        "count_occurrences_u64: word too long for overflow-free counting");
  }
  const int m = p.size();
  std::vector<std::uint64_t> table(static_cast<std::size_t>(m) + 1, 0);
  table[0] = 1;
  for (Position i = 1; i <= w.size(); ++i) {
    for (int j = m; j >= 1; --j) {
      if (p.at(j) == w.at(i)) {
        table[static_cast<std::size_t>(j)] +=
            table[static_cast<std::size_t>(j - 1)];
      }
    }
  }
  return table[static_cast<std::size_t>(m)];
}

bool occurs(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  int j = 1;
  for (Position i = 1; i <= w.size() && j <= p.size(); ++i) {
    if (w.at(i) == p.at(j)) ++j;
  }
  return j > p.size();
}

std::vector<std::vector<Position>> enumerate_occurrences(
    const BinaryWord& p, const BinaryWord& w,
    std::optional<std::uint64_t> max_results) {
  require_pattern(p);
  std::vector<std::vector<Position>> out;
  std::vector<Position> current;
  current.reserve(static_cast<std::size_t>(p.size()));
  // DFS in increasing-position order yields lexicographic tuple order.
  std::function<void(int, Position)> walk = [&](int j, Position from) {
    if (j > p.size()) {
      if (max_results && out.size() >= *max_results) {
        throw BoundExceeded("enumerate_occurrences: result limit exceeded");
      }
      out.push_back(current);
      return;
    }
    // Prune: not enough letters left for the remaining pattern suffix.
    for (Position i = from; i + (p.size() - j) <= w.size(); ++i) {
      if (w.at(i) == p.at(j)) {
        current.push_back(i);
        walk(j + 1, i + 1);
        current.pop_back();
      }
    }
  };
  walk(1, 1);
  return out;
}

std::optional<std::vector<Position>> lexmin_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w) {
  require_pattern(p);
  // Greedy leftmost match is the lexicographically smallest tuple.
  std::vector<Position> occ;
  occ.reserve(static_cast<std::size_t>(p.size()));
  Position i = 1;
  for (int j = 1; j <= p.size(); ++j) {
    while (i <= w.size() && w.at(i) != p.at(j)) ++i;
    if (i > w.size()) return std::nullopt;
    occ.push_back(i);
    ++i;
  }
  return occ;
}

std::optional<std::vector<Position>> lexmax_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w) {
  require_pattern(p);
  // Greedy rightmost match, scanning both strings from the right.
  std::vector<Position> occ(static_cast<std::size_t>(p.size()));
  Position i = w.size();
  for (int j = p.size(); j >= 1; --j) {
    while (i >= 1 && w.at(i) != p.at(j)) --i;
    if (i < 1) return std::nullopt;
    occ[static_cast<std::size_t>(j - 1)] = i;
    --i;
  }
  return occ;
}

std::vector<bool> covered_positions(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  const int m = p.size();
  const int n = w.size();
  // prefix[i][j] = p[1..j] occurs in w[1..i]; suffix[i][j] = p[j..m] occurs
  // in w[i..n]. Both are monotone reachability tables.
  std::vector<std::vector<bool>> prefix(
      static_cast<std::size_t>(n) + 1,
      std::vector<bool>(static_cast<std::size_t>(m) + 1, false));
  for (int i = 0; i <= n; ++i) prefix[static_cast<std::size_t>(i)][0] = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      bool value = prefix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      if (w.at(i) == p.at(j)) {
        value = value ||
                prefix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      }
      prefix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    }
  }
  std::vector<std::vector<bool>> suffix(
      static_cast<std::size_t>(n) + 2,
      std::vector<bool>(static_cast<std::size_t>(m) + 2, false));
  for (int i = 1; i <= n + 1; ++i) {
    suffix[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + 1)] = true;
  }
  for (int i = n; i >= 1; --i) {
    for (int j = m; j >= 1; --j) {
      bool value = suffix[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)];
      if (w.at(i) == p.at(j)) {
        value = value ||
                suffix[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)];
      }
      suffix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    }
  }
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  for (int l = 1; l <= n; ++l) {
    for (int j = 1; j <= m; ++j) {
      if (w.at(l) == p.at(j) &&
          prefix[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(j - 1)] &&
          suffix[static_cast<std::size_t>(l + 1)][static_cast<std::size_t>(j + 1)]) {
        covered[static_cast<std::size_t>(l)] = true;
        break;
      }
    }
  }
  return covered;
}

std::vector<BinaryWord> containing_words(const BinaryWord& p, int n) {
  require_pattern(p);
  if (n < 0 || n > 62) {
    throw std::invalid_argument("containing_words: length must be in [0,62]");
  }
  std::vector<BinaryWord> out;
  if (n < p.size()) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BinaryWord w = BinaryWord::from_mask(n, mask);
    if (occurs(p, w)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<BinaryWord> primitive_words(const BinaryWord& p, int n) {
  require_pattern(p);
  if (n < 0 || n > 62) {
    throw std::invalid_argument("primitive_words: length must be in [0,62]");
  }
  std::vector<BinaryWord> out;
  if (n < p.size()) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BinaryWord w = BinaryWord::from_mask(n, mask);
    if (!occurs(p, w)) continue;
    auto covered = covered_positions(p, w);
    bool all = true;
    for (Position l = 1; l <= n && all; ++l) {
      all = covered[static_cast<std::size_t>(l)];
    }
    if (all) out.push_back(std::move(w));
  }
  return out;
}

BinaryWord reduce(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  if (!occurs(p, w)) {
    throw std::invalid_argument("reduce: pattern does not occur");
  }
  auto covered = covered_positions(p, w);
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(w.size()));
  for (Position l = 1; l <= w.size(); ++l) {
    if (covered[static_cast<std::size_t>(l)]) {
      bits.push_back(static_cast<std::uint8_t>(w.at(l)));
    }
  }
  return BinaryWord(std::move(bits));
}

std::map<Count, Count> census_table(const BinaryWord& p, int n) {
  require_pattern(p);
  if (n < 0 || n > 62) {
    throw std::invalid_argument("census_table: length must be in [0,62]");
  }
  std::map<Count, Count> table;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BinaryWord w = BinaryWord::from_mask(n, mask);
    table[Count(count_occurrences_u64(p, w))] += 1;
  }
  return table;
}

}  // namespace subwords::oracle
