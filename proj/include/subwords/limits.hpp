#pragma once

#include <stdexcept>
#include <string>

namespace subwords {

// Exhaustive sweeps are exponential in word length. CLI commands that walk
// all words of length n refuse past this bound unless the caller raises it
// (flag --allow-large or environment variable SUBWORDS_EXHAUSTIVE_BOUND).
inline constexpr int kDefaultExhaustiveBound = 16;

// Thrown when a requested computation exceeds the configured exhaustive
// bound. The CLI maps this to its own exit code so scripted callers can
// distinguish "refused" from "failed".
class BoundExceeded : public std::runtime_error {
public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Effective bound: the environment override when present and parseable,
// otherwise the default.
int exhaustive_bound();

}  // namespace subwords
