#ifndef GRASMULT_CORE_BIGINT_HPP
#define GRASMULT_CORE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace grasmult {

// Multiplicities and Hilbert-function values outgrow machine words quickly;
// everything arithmetic in this library is exact.
using bigint = boost::multiprecision::cpp_int;

inline std::string to_decimal(const bigint& v) { return v.str(); }

// binomial(n, k) with the combinatorial convention: 0 whenever k < 0,
// n < 0 or k > n.
inline bigint binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  bigint r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace grasmult

#endif
