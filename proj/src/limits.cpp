#include "subwords/limits.hpp"

#include <cstdlib>
#include <string>

namespace subwords {

int exhaustive_bound() {
  if (const char* env = std::getenv("SUBWORDS_EXHAUSTIVE_BOUND")) {
    try {
      int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // Unparseable override falls through to the default.
    }
  }
  return kDefaultExhaustiveBound;
}

}  // namespace subwords
