#include "subwords/generation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "subwords/occurrence.hpp"
#include "subwords/oracle.hpp"

namespace subwords {

namespace {

void require_pattern(const BinaryWord& p) {
  if (p.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
}

int opp(int letter) { return 1 - letter; }

using Letters = std::vector<std::uint8_t>;

// All distinct interleavings of a copies of x and b copies of y, for
// distinct letters x, y. C(a+b, a) of them.
std::vector<Letters> shuffles(int a, int x, int b, int y) {
  if (a < 0 || b < 0) throw std::invalid_argument("shuffles: negative count");
  Letters base;
  base.reserve(static_cast<std::size_t>(a + b));
  for (int i = 0; i < a; ++i) base.push_back(static_cast<std::uint8_t>(x));
  for (int i = 0; i < b; ++i) base.push_back(static_cast<std::uint8_t>(y));
  std::sort(base.begin(), base.end());
  std::vector<Letters> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Enumerates every way to write `total` as an ordered sum of `slots`
// nonnegative parts.
void for_each_composition(int total, int slots,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(static_cast<std::size_t>(slots), 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == slots - 1) {
      parts[static_cast<std::size_t>(idx)] = left;
      fn(parts);
      return;
    }
    for (int u = 0; u <= left; ++u) {
      parts[static_cast<std::size_t>(idx)] = u;
      self(self, idx + 1, left - u);
    }
  };
  if (slots <= 0) {
    if (total == 0) fn(parts);
    return;
  }
  rec(rec, 0, total);
}

// The fixed zone layout of the containing-word constructor for one plan:
// per zone, the arrangements it admits. Concatenating one arrangement per
// zone yields a word; the zones are independent.
std::vector<std::vector<Letters>> containing_blocks(const RunDecomposition& pd,
                                                    const InsertionPlan& plan) {
  const int r = pd.run_count();
  auto s = [&](int i) { return plan.counts[static_cast<std::size_t>(i - 1)]; };
  std::vector<std::vector<Letters>> blocks;
  if (r == 1) {
    const int v = pd.run(1).letter;
    blocks.push_back(shuffles(pd.run(1).length() + s(1), v, s(2), opp(v)));
    return blocks;
  }
  // Front zone: the first run short one letter, interleaved with new
  // letters of the opposite value, then the pinned run letter.
  {
    const int v = pd.run(1).letter;
    auto arrangements = shuffles(pd.run(1).length() - 1, v, s(r + 1), opp(v));
    for (auto& a : arrangements) a.push_back(static_cast<std::uint8_t>(v));
    blocks.push_back(std::move(arrangements));
  }
  // Interior zones j = 2..r-1 (pattern run j short one letter, mixed with
  // letters of the previous run's value, pinned close).
  for (int j = 2; j <= r - 1; ++j) {
    const int v = pd.run(j).letter;
    auto arrangements =
        shuffles(pd.run(j).length() - 1, v, s(r - j + 2), opp(v));
    for (auto& a : arrangements) a.push_back(static_cast<std::uint8_t>(v));
    blocks.push_back(std::move(arrangements));
  }
  // Final zone: the whole last run plus its growth, mixed with letters of
  // the previous run's value; nothing pinned.
  {
    const int v = pd.run(r).letter;
    blocks.push_back(shuffles(pd.run(r).length() + s(1), v, s(2), opp(v)));
  }
  return blocks;
}

void add_cartesian(const std::vector<std::vector<Letters>>& blocks,
                   GenerationResult& result) {
  std::vector<std::size_t> pick(blocks.size(), 0);
  while (true) {
    Letters bits;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Letters& part = blocks[b][pick[b]];
      bits.insert(bits.end(), part.begin(), part.end());
    }
    BinaryWord word(std::move(bits));
    result.multiplicity[word] += 1;
    result.words.insert(std::move(word));
    result.derivations += 1;
    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      if (++pick[b] < blocks[b].size()) break;
      pick[b] = 0;
      if (b == 0) return;
    }
  }
}

// Stage k >= 2 of the primitive-word constructor: every word obtained
// from `cur` by inserting t copies of the stage letter into the zone of
// pattern run r - k + 2. The zone starts right after the intact pattern
// prefix and ends at the earlier of the rightmost-occurrence anchor of
// that run and the end of the word run containing the zone start.
std::vector<BinaryWord> eta_stage(const RunDecomposition& pd,
                                  const BinaryWord& cur, int k, int t) {
  const int r = pd.run_count();
  const RunId zone_run = r - k + 2;
  const int host_letter = pd.run(zone_run).letter;
  const int new_letter = pd.run(zone_run - 1).letter;
  Position zone_start = 1;
  for (RunId i = 1; i <= zone_run - 1; ++i) zone_start += pd.run(i).length();

  const RunDecomposition wd = decompose(cur);
  auto heads = lexmax_heads(pd, wd);
  if (!heads) throw std::logic_error("eta_stage: pattern lost from word");
  const Position anchor =
      wd.run((*heads)[static_cast<std::size_t>(zone_run - 1)]).last;
  auto block_first = nth_same_parity_left(cur, anchor, pd.run(zone_run).length());
  if (!block_first) throw std::logic_error("eta_stage: anchor block underflow");
  const Position run_end = wd.run(wd.run_index(zone_start)).last;
  const Position boundary = std::min(*block_first, run_end);
  if (cur.at(zone_start) != host_letter || boundary < zone_start) {
    throw std::logic_error("eta_stage: zone geometry violated");
  }
  const int hosts = boundary - zone_start;

  std::vector<BinaryWord> out;
  for (const Letters& mid : shuffles(hosts, host_letter, t, new_letter)) {
    Letters bits(cur.bits().begin(), cur.bits().begin() + (zone_start - 1));
    bits.insert(bits.end(), mid.begin(), mid.end());
    bits.insert(bits.end(), cur.bits().begin() + (boundary - 1),
                cur.bits().end());
    out.emplace_back(std::move(bits));
  }
  return out;
}

// Shared driver for the primitive constructor: stage 1 appends t_1 copies
// of the last run's letter, stages 2..r insert via eta_stage. `free_plan`
// enumerates all budget splits; otherwise the plan is fixed.
GenerationResult run_primitive_stages(const BinaryWord& p, int n,
                                      const InsertionPlan* fixed_plan) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  const int r = pd.run_count();
  const int m = p.size();
  GenerationResult result;
  if (n < m) return result;
  const int budget = n - m;

  auto stage1_word = [&](int t) {
    Letters bits(p.bits());
    bits.insert(bits.end(), static_cast<std::size_t>(t),
                static_cast<std::uint8_t>(pd.run(r).letter));
    return BinaryWord(std::move(bits));
  };

  // level: word -> number of derivations that reach it. The stage
  // transform depends only on the word itself, so merging derivation
  // paths per level is sound.
  std::map<BinaryWord, std::uint64_t> level;
  if (fixed_plan) {
    level[stage1_word(fixed_plan->counts[0])] = 1;
  } else if (r == 1) {
    level[stage1_word(budget)] = 1;
  } else {
    for (int t = 0; t <= budget; ++t) level[stage1_word(t)] += 1;
  }

  for (int k = 2; k <= r; ++k) {
    std::map<BinaryWord, std::uint64_t> next;
    for (const auto& [word, mult] : level) {
      const int remaining = n - word.size();
      int t_lo = 0, t_hi = remaining;
      if (fixed_plan) {
        t_lo = t_hi = fixed_plan->counts[static_cast<std::size_t>(k - 1)];
        if (t_hi > remaining) {
          throw std::logic_error("run_primitive_stages: plan exceeds budget");
        }
      } else if (k == r) {
        t_lo = remaining;  // last stage consumes whatever is left
      }
      for (int t = t_lo; t <= t_hi; ++t) {
        for (BinaryWord& grown : eta_stage(pd, word, k, t)) {
          next[std::move(grown)] += mult;
        }
      }
    }
    level = std::move(next);
  }

  for (const auto& [word, mult] : level) {
    result.words.insert(word);
    result.derivations += mult;
  }
  result.multiplicity = std::move(level);
  return result;
}

}  // namespace

int InsertionPlan::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

GenerationResult generate_containing(const BinaryWord& p, int n) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  GenerationResult result;
  if (n < p.size()) return result;
  const int slots = pd.run_count() == 1 ? 2 : pd.run_count() + 1;
  for_each_composition(n - p.size(), slots, [&](const std::vector<int>& parts) {
    add_cartesian(containing_blocks(pd, InsertionPlan{parts}), result);
  });
  return result;
}

GenerationResult generate_containing_for_plan(const BinaryWord& p,
                                              const InsertionPlan& plan) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  const std::size_t want = pd.run_count() == 1
                               ? 2u
                               : static_cast<std::size_t>(pd.run_count()) + 1;
  if (plan.counts.size() != want) {
    throw std::invalid_argument("generate_containing_for_plan: plan needs " +
                                std::to_string(want) + " entries");
  }
  for (int c : plan.counts) {
    if (c < 0) throw std::invalid_argument("plan entries must be >= 0");
  }
  GenerationResult result;
  add_cartesian(containing_blocks(pd, plan), result);
  return result;
}

GenerationResult generate_primitive(const BinaryWord& p, int n) {
  return run_primitive_stages(p, n, nullptr);
}

GenerationResult generate_primitive_for_plan(const BinaryWord& p,
                                             const InsertionPlan& plan) {
  require_pattern(p);
  const RunDecomposition pd = decompose(p);
  if (plan.counts.size() != static_cast<std::size_t>(pd.run_count())) {
    throw std::invalid_argument(
        "generate_primitive_for_plan: plan needs one entry per pattern run");
  }
  for (int c : plan.counts) {
    if (c < 0) throw std::invalid_argument("plan entries must be >= 0");
  }
  return run_primitive_stages(p, p.size() + plan.total(), &plan);
}

std::vector<BinaryWord> primitive_set(const BinaryWord& p, int n,
                                      const Count& k) {
  require_pattern(p);
  if (k < 1) {
    throw std::invalid_argument("primitive_set: occurrence count must be >= 1");
  }
  std::vector<BinaryWord> out;
  for (int len = p.size(); len <= n; ++len) {
    for (const BinaryWord& w : generate_primitive(p, len).words) {
      if (oracle::count_occurrences(p, w) == k) out.push_back(w);
    }
  }
  return out;
}

std::vector<BinaryWord> solve_primitive_equation(const BinaryWord& p, int n,
                                                 const Count& k) {
  require_pattern(p);
  if (k < 1) {
    throw std::invalid_argument(
        "solve_primitive_equation: occurrence count must be >= 1");
  }
  std::vector<BinaryWord> out;
  for (int len = p.size(); len <= n; ++len) {
    for (const BinaryWord& w : generate_primitive(p, len).words) {
      if (count_occurrences_formula(p, w) == k) out.push_back(w);
    }
  }
  return out;
}

std::vector<CompletionRegion> completion_regions(const BinaryWord& p,
                                                 const BinaryWord& w) {
  require_pattern(p);
  if (!is_primitive(p, w)) {
    throw std::invalid_argument("completion_regions: word is not primitive");
  }
  const RunDecomposition pd = decompose(p);
  const RunDecomposition wd = decompose(w);
  const int r = pd.run_count();
  const int n = w.size();

  if (r == 1) {
    // Single-run pattern: the whole word is one absorption stretch.
    return {CompletionRegion{1, n, opp(pd.run(1).letter)}};
  }

  auto min_heads = lexmin_heads(pd, wd);
  auto max_heads = lexmax_heads(pd, wd);
  if (!min_heads || !max_heads) {
    throw std::logic_error("completion_regions: primitive word lost pattern");
  }
  std::vector<CompletionRegion> regions;
  // Front: everything before the last letter of the leftmost occurrence's
  // first block.
  {
    const Position min_start = wd.run((*min_heads)[0]).first;
    auto hi = nth_same_parity_right(w, min_start, pd.run(1).length());
    if (!hi) throw std::logic_error("completion_regions: front block underflow");
    regions.push_back(CompletionRegion{1, *hi - 1, opp(pd.run(1).letter)});
  }
  // Interior: strictly between the rightmost occurrence's block start and
  // the leftmost occurrence's block end of each interior pattern run.
  for (RunId i = 2; i <= r - 1; ++i) {
    const int c = pd.run(i).length();
    const Position max_end = wd.run((*max_heads)[static_cast<std::size_t>(i - 1)]).last;
    const Position min_start = wd.run((*min_heads)[static_cast<std::size_t>(i - 1)]).first;
    auto a = nth_same_parity_left(w, max_end, c);
    auto b = nth_same_parity_right(w, min_start, c);
    if (!a || !b) throw std::logic_error("completion_regions: block underflow");
    if (*a < *b) {
      regions.push_back(CompletionRegion{*a + 1, *b - 1, opp(pd.run(i).letter)});
    }
  }
  // Back: everything after the first letter of the rightmost occurrence's
  // last block.
  {
    const Position max_end =
        wd.run((*max_heads)[static_cast<std::size_t>(r - 1)]).last;
    auto lo = nth_same_parity_left(w, max_end, pd.run(r).length());
    if (!lo) throw std::logic_error("completion_regions: back block underflow");
    regions.push_back(CompletionRegion{*lo + 1, n, opp(pd.run(r).letter)});
  }

  // The spans must be disjoint and ordered or the splice would be wrong.
  for (std::size_t i = 1; i < regions.size(); ++i) {
    if (regions[i].lo <= regions[i - 1].hi ||
        regions[i].lo <= regions[i - 1].lo) {
      throw std::logic_error("completion_regions: overlapping spans");
    }
  }
  return regions;
}

Count completion_count(const BinaryWord& p, const BinaryWord& w, int target) {
  auto regions = completion_regions(p, w);
  const int extra = target - w.size();
  if (extra < 0) return 0;
  // Sum over splits of `extra` across regions of the product of
  // per-region shuffle counts.
  auto rec = [&](auto&& self, std::size_t idx, int left) -> Count {
    if (idx + 1 == regions.size()) {
      return choose(regions[idx].hosts() + left, left);
    }
    Count total = 0;
    for (int u = 0; u <= left; ++u) {
      total += choose(regions[idx].hosts() + u, u) * self(self, idx + 1, left - u);
    }
    return total;
  };
  return rec(rec, 0, extra);
}

std::vector<BinaryWord> enumerate_completions(const BinaryWord& p,
                                              const BinaryWord& w, int target) {
  auto regions = completion_regions(p, w);
  std::vector<BinaryWord> out;
  const int extra = target - w.size();
  if (extra < 0) return out;

  std::set<BinaryWord> seen;
  for_each_composition(extra, static_cast<int>(regions.size()),
                       [&](const std::vector<int>& parts) {
    // Per-region arrangements for this split, then a cartesian splice.
    std::vector<std::vector<Letters>> pools;
    pools.reserve(regions.size());
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const CompletionRegion& reg = regions[i];
      for (Position pos = reg.lo; pos <= reg.hi; ++pos) {
        if (w.at(pos) != opp(reg.letter)) {
          throw std::logic_error("enumerate_completions: host letter mismatch");
        }
      }
      pools.push_back(shuffles(reg.hosts(), opp(reg.letter),
                               parts[i], reg.letter));
    }
    std::vector<std::size_t> pick(pools.size(), 0);
    while (true) {
      Letters bits;
      Position done = 0;  // last position of w already copied or replaced
      for (std::size_t i = 0; i < regions.size(); ++i) {
        for (Position pos = done + 1; pos < regions[i].lo; ++pos) {
          bits.push_back(static_cast<std::uint8_t>(w.at(pos)));
        }
        const Letters& part = pools[i][pick[i]];
        bits.insert(bits.end(), part.begin(), part.end());
        done = std::max(done, regions[i].hi);
      }
      for (Position pos = done + 1; pos <= w.size(); ++pos) {
        bits.push_back(static_cast<std::uint8_t>(w.at(pos)));
      }
      seen.insert(BinaryWord(std::move(bits)));
      std::size_t b = pools.size();
      bool advanced = false;
      while (b > 0) {
        --b;
        if (++pick[b] < pools[b].size()) {
          advanced = true;
          break;
        }
        pick[b] = 0;
      }
      if (!advanced) break;
    }
  });
  out.assign(seen.begin(), seen.end());
  return out;
}

std::map<Count, Count> census_distribution(const BinaryWord& p, int n) {
  require_pattern(p);
  if (n < 0) throw std::invalid_argument("census_distribution: negative length");
  std::map<Count, Count> table;
  Count containing = 0;
  for (int len = p.size(); len <= n; ++len) {
    for (const BinaryWord& w : generate_primitive(p, len).words) {
      const Count k = oracle::count_occurrences(p, w);
      const Count pc = completion_count(p, w, n);
      table[k] += pc;
      containing += pc;
    }
  }
  Count zero = (Count(1) << n) - containing;
  if (zero != 0) table[0] = zero;
  return table;
}

Count census_primitive(const BinaryWord& p, int n, const Count& k) {
  require_pattern(p);
  if (k < 1) {
    throw std::invalid_argument(
        "census_primitive: occurrence count must be >= 1");
  }
  Count total = 0;
  for (const BinaryWord& w : primitive_set(p, n, k)) {
    total += completion_count(p, w, n);
  }
  return total;
}

}  // namespace subwords
