#include "subwords/count.hpp"

namespace subwords {

Count choose(long long a, long long k) {
  if (k == 0) return 1;
  if (k < 0 || a < 0) return 0;
  if (a < k) return 0;
  if (k > a - k) k = a - k;
  Count result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (a - k + i);
    result /= i;
  }
  return result;
}

}  // namespace subwords
