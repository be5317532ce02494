#ifndef GRASMULT_CORE_HILBERT_HPP
#define GRASMULT_CORE_HILBERT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "grassmannian.hpp"

namespace grasmult {

// Polynomial in one variable with nonnegative exact integer coefficients.
// coefficient of z^t sits at index t; trailing zeros are trimmed, so the
// zero polynomial has no stored coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<bigint> coefficients);

  static IntPolynomial one();

  const std::vector<bigint>& coefficients() const { return coeffs_; }
  bigint coefficient(std::size_t t) const;
  long long degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(std::size_t t, const bigint& c);
  bigint evaluate_at_one() const;

  std::string to_string() const;  // e.g. "1 + 3z + z^2"
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim();
  std::vector<bigint> coeffs_;
};

// numerator / (1-z)^pole_order. The closed form rests on an unproven
// conjecture, hence the flag; the multiplicity read off the numerator does
// not (it is a theorem).
struct HilbertSeries {
  IntPolynomial numerator;
  long long pole_order = 0;
  bool conjectural = true;
};

// sum of w entries minus d(d+1)/2; the dimension of the variety and the
// number of points with y > d on any one family.
long long pole_order(const Instance& inst);

HilbertSeries hilbert_series(const Instance& inst, std::uint64_t budget = kDefaultBudget);

// Coefficient of z^m in the expansion: sum_t h_t * binomial(T+m-t-1, m-t).
// For T = 0 the series is the bare numerator.
bigint hilbert_function(const HilbertSeries& hs, long long m);

// Independent count: multisets of cardinality m over the reflection rectangle
// whose support passes the chain condition. Exhaustive; intended for small
// instances.
bigint hilbert_function_oracle(const Instance& inst, long long m,
                               std::uint64_t budget = kDefaultBudget);

// Numerator evaluated at z = 1.
bigint multiplicity_from_series(const HilbertSeries& hs);

}  // namespace grasmult

#endif
