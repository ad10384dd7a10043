#include "subwords/occurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace subwords {

namespace {

void require_pattern(const BinaryWord& p) {
  if (p.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
}

// Positions of the k letters equal to w[start] scanning right from start,
// start itself included. Used to expand a head chain into an occurrence.
std::vector<Position> collect_right(const BinaryWord& w, Position start,
                                    int k) {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(k));
  const int letter = w.at(start);
  for (Position i = start; i <= w.size() && static_cast<int>(out.size()) < k;
       ++i) {
    if (w.at(i) == letter) out.push_back(i);
  }
  if (static_cast<int>(out.size()) < k) {
    throw std::logic_error("collect_right: fewer letters than promised");
  }
  return out;
}

// Mirror of collect_right: k same-letter positions ending at `end`,
// returned in increasing order.
std::vector<Position> collect_left(const BinaryWord& w, Position end, int k) {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(k));
  const int letter = w.at(end);
  for (Position i = end; i >= 1 && static_cast<int>(out.size()) < k; --i) {
    if (w.at(i) == letter) out.push_back(i);
  }
  if (static_cast<int>(out.size()) < k) {
    throw std::logic_error("collect_left: fewer letters than promised");
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

int same_parity_sum(const RunDecomposition& d, RunId i, RunId j) {
  if (i > j) return 0;
  if (((j - i) % 2) != 0) {
    throw std::invalid_argument("same_parity_sum: endpoints carry different letters");
  }
  if (i < 1 || j > d.run_count()) {
    throw std::out_of_range("same_parity_sum: run index outside decomposition");
  }
  int total = 0;
  for (RunId k = i; k <= j; k += 2) total += d.run(k).length();
  return total;
}

std::optional<int> left_span(const RunDecomposition& d, RunId i, int target) {
  if (target < 1) throw std::invalid_argument("left_span: target must be >= 1");
  if (i < 1 || i > d.run_count()) {
    throw std::out_of_range("left_span: run index outside decomposition");
  }
  int total = 0;
  for (int k = 0; i - 2 * k >= 1; ++k) {
    total += d.run(i - 2 * k).length();
    if (total >= target) return k;
  }
  return std::nullopt;
}

std::optional<int> right_span(const RunDecomposition& d, RunId i, int target) {
  if (target < 1) throw std::invalid_argument("right_span: target must be >= 1");
  if (i < 1 || i > d.run_count()) {
    throw std::out_of_range("right_span: run index outside decomposition");
  }
  int total = 0;
  for (int k = 0; i + 2 * k <= d.run_count(); ++k) {
    total += d.run(i + 2 * k).length();
    if (total >= target) return k;
  }
  return std::nullopt;
}

int alpha(const RunDecomposition& pattern, const RunDecomposition& word) {
  if (pattern.run_count() == 0 || word.run_count() == 0) {
    throw std::invalid_argument("alpha: needs nonempty pattern and word");
  }
  return word.run(1).letter == pattern.run(1).letter ? 1 : 2;
}

std::optional<RunId> zeta(const RunDecomposition& pattern,
                          const RunDecomposition& word) {
  if (pattern.run_count() == 0 || word.run_count() == 0) {
    throw std::invalid_argument("zeta: needs nonempty pattern and word");
  }
  const int s = word.run_count();
  RunId z = word.run(s).letter == pattern.run(pattern.run_count()).letter
                ? s
                : s - 1;
  if (z < 1) return std::nullopt;
  return z;
}

std::optional<std::vector<RunId>> lexmin_heads(const RunDecomposition& pattern,
                                               const RunDecomposition& word) {
  const int r = pattern.run_count();
  const int s = word.run_count();
  if (r == 0) throw std::invalid_argument("lexmin_heads: empty pattern");
  if (s == 0) return std::nullopt;
  std::vector<RunId> heads;
  heads.reserve(static_cast<std::size_t>(r));
  RunId head = alpha(pattern, word);
  if (head > s) return std::nullopt;
  for (RunId i = 1; i <= r; ++i) {
    heads.push_back(head);
    auto span = right_span(word, head, pattern.run(i).length());
    if (!span) return std::nullopt;
    if (i < r) {
      head = head + 2 * *span + 1;
      if (head > s) return std::nullopt;
    }
  }
  return heads;
}

std::optional<std::vector<RunId>> lexmax_heads(const RunDecomposition& pattern,
                                               const RunDecomposition& word) {
  const int r = pattern.run_count();
  const int s = word.run_count();
  if (r == 0) throw std::invalid_argument("lexmax_heads: empty pattern");
  if (s == 0) return std::nullopt;
  auto z = zeta(pattern, word);
  if (!z) return std::nullopt;
  // Walk pattern runs right to left; heads[i-1] anchors pattern run i.
  std::vector<RunId> heads(static_cast<std::size_t>(r));
  RunId head = *z;
  for (RunId i = r; i >= 1; --i) {
    heads[static_cast<std::size_t>(i - 1)] = head;
    auto span = left_span(word, head, pattern.run(i).length());
    if (!span) return std::nullopt;
    if (i > 1) {
      head = head - 2 * *span - 1;
      if (head < 1) return std::nullopt;
    }
  }
  return heads;
}

std::optional<std::vector<Position>> lexmin_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  const RunDecomposition wd = decompose(w);
  auto heads = lexmin_heads(pd, wd);
  if (!heads) return std::nullopt;
  std::vector<Position> occ;
  occ.reserve(static_cast<std::size_t>(p.size()));
  for (RunId i = 1; i <= pd.run_count(); ++i) {
    Position start = wd.run((*heads)[static_cast<std::size_t>(i - 1)]).first;
    for (Position pos : collect_right(w, start, pd.run(i).length())) {
      occ.push_back(pos);
    }
  }
  return occ;
}

std::optional<std::vector<Position>> lexmax_occurrence(const BinaryWord& p,
                                                       const BinaryWord& w) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  const RunDecomposition wd = decompose(w);
  auto heads = lexmax_heads(pd, wd);
  if (!heads) return std::nullopt;
  std::vector<Position> occ;
  occ.reserve(static_cast<std::size_t>(p.size()));
  for (RunId i = 1; i <= pd.run_count(); ++i) {
    Position end = wd.run((*heads)[static_cast<std::size_t>(i - 1)]).last;
    for (Position pos : collect_left(w, end, pd.run(i).length())) {
      occ.push_back(pos);
    }
  }
  return occ;
}

Count count_occurrences_formula(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  const RunDecomposition wd = decompose(w);
  if (w.size() < p.size()) return 0;
  auto heads = lexmin_heads(pd, wd);
  if (!heads) return 0;
  auto z = zeta(pd, wd);
  if (!z) return 0;
  const int r = pd.run_count();
  const int s = wd.run_count();

  // memo[depth][bound]: depth walks pattern runs right to left (depth i
  // handles pattern run r - i + 1), bound is the rightmost run of w the
  // current block may touch.
  std::vector<std::vector<std::optional<Count>>> memo(
      static_cast<std::size_t>(r) + 2,
      std::vector<std::optional<Count>>(static_cast<std::size_t>(s) + 1));

  auto rec = [&](auto&& self, int depth, RunId bound) -> Count {
    if (depth > r) return 1;
    if (bound < 1) return 0;
    auto& slot = memo[static_cast<std::size_t>(depth)][static_cast<std::size_t>(bound)];
    if (slot) return *slot;
    const RunId run = r - depth + 1;
    const int c = pd.run(run).length();
    const RunId head = (*heads)[static_cast<std::size_t>(run - 1)];
    Count total = 0;
    if (bound >= head && ((bound - head) % 2) == 0) {
      const int upper = same_parity_sum(wd, head, bound);
      for (int q = c; q <= upper; ++q) {
        auto span = left_span(wd, bound, q);
        if (!span) throw std::logic_error("count formula: span must exist");
        total += choose(q - 1, c - 1) *
                 self(self, depth + 1, bound - 2 * *span - 1);
      }
    }
    slot = total;
    return total;
  };
  return rec(rec, 1, *z);
}

bool is_lexmin_occurrence(const BinaryWord& p, const BinaryWord& w,
                          const std::vector<Position>& occ) {
  require_pattern(p);
  if (static_cast<int>(occ.size()) != p.size()) {
    throw std::invalid_argument("is_lexmin_occurrence: wrong tuple length");
  }
  for (std::size_t t = 0; t < occ.size(); ++t) {
    if (occ[t] < 1 || occ[t] > w.size()) {
      throw std::invalid_argument("is_lexmin_occurrence: position outside word");
    }
    if (t > 0 && occ[t] <= occ[t - 1]) {
      throw std::invalid_argument("is_lexmin_occurrence: positions not increasing");
    }
    if (w.at(occ[t]) != p.at(static_cast<Position>(t) + 1)) {
      throw std::invalid_argument("is_lexmin_occurrence: letters do not match");
    }
  }

  // Greedy left-to-right match of p in w; it exists because occ is an
  // occurrence. greedy_end[i] = last position of the greedy match of the
  // first i pattern runs.
  const RunDecomposition pd = decompose(p);
  const int r = pd.run_count();
  std::vector<Position> greedy(static_cast<std::size_t>(p.size()));
  {
    Position i = 1;
    for (int j = 1; j <= p.size(); ++j) {
      while (w.at(i) != p.at(j)) ++i;
      greedy[static_cast<std::size_t>(j - 1)] = i;
      ++i;
    }
  }
  std::vector<bool> member(static_cast<std::size_t>(w.size()) + 1, false);
  for (Position pos : occ) member[static_cast<std::size_t>(pos)] = true;

  // A letter x of run i's value, outside the occurrence, strictly left of
  // the block's last chosen position, and reachable after a full match of
  // runs 1..i-1, proves a smaller occurrence exists.
  int prefix_len = 0;
  for (RunId i = 1; i <= r; ++i) {
    const int c = pd.run(i).length();
    const int letter = pd.run(i).letter;
    const Position prev_end =
        i == 1 ? 0 : greedy[static_cast<std::size_t>(prefix_len - 1)];
    prefix_len += c;
    const Position block_last = occ[static_cast<std::size_t>(prefix_len - 1)];
    for (Position x = prev_end + 1; x < block_last; ++x) {
      if (w.at(x) == letter && !member[static_cast<std::size_t>(x)]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<LetterClass> classify_letters(const BinaryWord& p,
                                          const BinaryWord& w) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  const RunDecomposition wd = decompose(w);
  auto min_heads = lexmin_heads(pd, wd);
  auto max_heads = lexmax_heads(pd, wd);
  if (!min_heads || !max_heads) {
    throw std::invalid_argument("classify_letters: pattern does not occur in word");
  }
  const int r = pd.run_count();
  const int n = w.size();

  std::vector<bool> in_extreme(static_cast<std::size_t>(n) + 1, false);
  // window_lo[i] = first position of the rightmost occurrence's block i;
  // window_hi[i] = last position of the leftmost occurrence's block i.
  std::vector<Position> window_lo(static_cast<std::size_t>(r) + 1);
  std::vector<Position> window_hi(static_cast<std::size_t>(r) + 1);
  for (RunId i = 1; i <= r; ++i) {
    const int c = pd.run(i).length();
    const Position min_start =
        wd.run((*min_heads)[static_cast<std::size_t>(i - 1)]).first;
    const Position max_end =
        wd.run((*max_heads)[static_cast<std::size_t>(i - 1)]).last;
    for (Position pos : collect_right(w, min_start, c)) {
      in_extreme[static_cast<std::size_t>(pos)] = true;
    }
    for (Position pos : collect_left(w, max_end, c)) {
      in_extreme[static_cast<std::size_t>(pos)] = true;
    }
    auto lo = nth_same_parity_left(w, max_end, c);
    auto hi = nth_same_parity_right(w, min_start, c);
    if (!lo || !hi) throw std::logic_error("classify_letters: block underflow");
    window_lo[static_cast<std::size_t>(i)] = *lo;
    window_hi[static_cast<std::size_t>(i)] = *hi;
  }
  const Position prefix_cut = window_hi[1];
  const Position suffix_cut = window_lo[static_cast<std::size_t>(r)];

  std::vector<LetterClass> out(static_cast<std::size_t>(n) + 1);
  for (Position l = 1; l <= n; ++l) {
    LetterClass cls;
    if (in_extreme[static_cast<std::size_t>(l)]) {
      cls = {true, LetterReason::in_extreme};
    } else if (r == 1 && w.at(l) != pd.run(1).letter) {
      // A one-run pattern never uses the opposite letter, and with no
      // neighbouring run to bridge into, such a letter is always locked
      // out. Pick the reason from where it sits relative to the extreme
      // blocks.
      if (l < prefix_cut) {
        cls = {false, LetterReason::prefix_deficit};
      } else if (l > suffix_cut) {
        cls = {false, LetterReason::suffix_deficit};
      } else {
        cls = {false, LetterReason::middle_gap};
      }
    } else {
      bool trapped = false;
      for (RunId i = 1; i <= r && !trapped; ++i) {
        trapped = window_lo[static_cast<std::size_t>(i)] < l &&
                  l < window_hi[static_cast<std::size_t>(i)];
      }
      if (trapped) {
        cls = {false, LetterReason::middle_gap};
      } else if (l < prefix_cut) {
        cls = {false, LetterReason::prefix_deficit};
      } else if (l > suffix_cut) {
        cls = {false, LetterReason::suffix_deficit};
      } else {
        cls = {true, LetterReason::bridged};
      }
    }
    out[static_cast<std::size_t>(l)] = cls;
  }
  return out;
}

bool is_primitive(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  if (!lexmin_heads(decompose(p), decompose(w))) return false;
  const auto classes = classify_letters(p, w);
  for (Position l = 1; l <= w.size(); ++l) {
    if (!classes[static_cast<std::size_t>(l)].covered) return false;
  }
  return true;
}

BinaryWord reduce_to_primitive(const BinaryWord& p, const BinaryWord& w) {
  require_pattern(p);
  if (!lexmin_heads(decompose(p), decompose(w))) {
    throw std::invalid_argument("reduce_to_primitive: pattern does not occur");
  }
  const auto classes = classify_letters(p, w);
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(w.size()));
  for (Position l = 1; l <= w.size(); ++l) {
    if (classes[static_cast<std::size_t>(l)].covered) {
      bits.push_back(static_cast<std::uint8_t>(w.at(l)));
    }
  }
  return BinaryWord(std::move(bits));
}

}  // namespace subwords
