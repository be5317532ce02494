#include "hilbert.hpp"

#include <sstream>

#include "paths.hpp"
#include "reflections.hpp"

namespace grasmult {

IntPolynomial::IntPolynomial(std::vector<bigint> coefficients) : coeffs_(std::move(coefficients)) {
  for (const bigint& c : coeffs_)
    if (c < 0) fail(errc::invalid_argument, "coefficients must be nonnegative");
  trim();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial{{bigint(1)}}; }

bigint IntPolynomial::coefficient(std::size_t t) const {
  return t < coeffs_.size() ? coeffs_[t] : bigint(0);
}

long long IntPolynomial::degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

void IntPolynomial::add_term(std::size_t t, const bigint& c) {
  if (c < 0) fail(errc::invalid_argument, "coefficients must be nonnegative");
  if (c == 0) return;
  if (t >= coeffs_.size()) coeffs_.resize(t + 1, bigint(0));
  coeffs_[t] += c;
}

bigint IntPolynomial::evaluate_at_one() const {
  bigint total = 0;
  for (const bigint& c : coeffs_) total += c;
  return total;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    if (coeffs_[t] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (t == 0 || coeffs_[t] != 1) os << coeffs_[t].str();
    if (t >= 1) os << 'z';
    if (t >= 2) os << '^' << t;
  }
  return os.str();
}

long long pole_order(const Instance& inst) {
  const long long d = inst.shape.d;
  long long sum = 0;
  for (int e : inst.w.entries()) sum += e;
  return sum - d * (d + 1) / 2;
}

HilbertSeries hilbert_series(const Instance& inst, std::uint64_t budget) {
  return HilbertSeries{turn_polynomial(inst, budget), pole_order(inst), true};
}

bigint hilbert_function(const HilbertSeries& hs, long long m) {
  if (m < 0) return 0;
  if (hs.pole_order == 0) return hs.numerator.coefficient(static_cast<std::size_t>(m));
  bigint total = 0;
  const auto& coeffs = hs.numerator.coefficients();
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    const long long mt = m - static_cast<long long>(t);
    if (mt < 0) break;
    total += coeffs[t] * binomial(hs.pole_order + mt - 1, mt);
  }
  return total;
}

namespace {

// Multisets of cardinality m over a fixed support U of size k: choose the
// positive multiplicities, binomial(m-1, k-1) ways.
class OracleSearch {
public:
  OracleSearch(const Instance& inst, long long m, std::uint64_t budget)
      : inst_(inst), m_(m), budget_(budget) {
    const int d = inst.shape.d;
    for (int x = 1; x <= d; ++x)
      for (int y = d + 1; y <= inst.shape.n; ++y) rectangle_.push_back({x, y});
  }

  bigint run() {
    if (m_ == 0) return 1;
    extend(0);
    return total_;
  }

private:
  void extend(std::size_t next) {
    if (++nodes_ > budget_)
      fail(errc::budget_exceeded,
           "Hilbert-function oracle exceeded the budget of " + std::to_string(budget_) + " nodes");
    const long long k = static_cast<long long>(support_.size());
    if (k >= 1) total_ += binomial(m_ - 1, k - 1);
    if (k >= m_) return;  // larger supports admit no multiset of size m
    for (std::size_t i = next; i < rectangle_.size(); ++i) {
      support_.push_back(rectangle_[i]);
      if (detail::chain_condition_support(support_, inst_)) extend(i + 1);
      support_.pop_back();
    }
  }

  const Instance& inst_;
  long long m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<GridPoint> rectangle_;
  std::vector<GridPoint> support_;  // stays sorted: points are taken in rectangle order
  bigint total_ = 0;
};

}  // namespace

bigint hilbert_function_oracle(const Instance& inst, long long m, std::uint64_t budget) {
  if (m < 0) return 0;
  return OracleSearch(inst, m, budget).run();
}

bigint multiplicity_from_series(const HilbertSeries& hs) { return hs.numerator.evaluate_at_one(); }

}  // namespace grasmult
