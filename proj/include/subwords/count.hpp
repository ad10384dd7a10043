#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace subwords {

// Occurrence counts grow like C(n, n/2), so every public count is
// arbitrary precision. Internal sweeps may use a u64 fast path when the
// word length guarantees no overflow (see oracle.hpp).
using Count = boost::multiprecision::cpp_int;

// Binomial coefficient with the conventions this library relies on
// throughout:
//   choose(a, 0) = 1 for every integer a, including negative a;
//   choose(a, k) = 0 for k < 0 or (a < k with a >= 0);
//   choose(a, k) = 0 for a < 0, k > 0.
// These make empty products and out-of-range sums vanish instead of
// needing case splits at the call sites.
Count choose(long long a, long long k);

}  // namespace subwords
