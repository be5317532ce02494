#include "grassmannian.hpp"

#include <algorithm>
#include <sstream>

#include "shadow.hpp"

namespace grasmult {

std::string to_string(GridPoint p) {
  std::ostringstream os;
  os << '(' << p.x << ',' << p.y << ')';
  return os.str();
}

std::string to_string(const CosetRep& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.entries().size(); ++i) {
    if (i) os << ',';
    os << c.entries()[i];
  }
  os << ')';
  return os.str();
}

CosetRep::CosetRep(GrassmannianShape shape, std::vector<int> entries)
    : shape_(shape), entries_(std::move(entries)) {
  if (shape_.n < 0 || shape_.d < 0 || shape_.d > shape_.n)
    fail(errc::invalid_argument, "shape requires 0 <= d <= n");
  if (static_cast<int>(entries_.size()) != shape_.d)
    fail(errc::invalid_argument, "coset representative needs exactly d entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > shape_.n)
      fail(errc::invalid_argument, "coset entry out of range [1,n]");
    if (i > 0 && entries_[i - 1] >= entries_[i])
      fail(errc::invalid_argument, "coset entries must be strictly increasing");
  }
}

FullPermutation expand_minimal(const CosetRep& c) {
  const int n = c.shape().n;
  std::vector<char> used(n + 1, 0);
  for (int e : c.entries()) used[e] = 1;
  FullPermutation p;
  p.word = c.entries();
  p.word.reserve(n);
  for (int v = 1; v <= n; ++v)
    if (!used[v]) p.word.push_back(v);
  return p;
}

bool bruhat_leq(const CosetRep& a, const CosetRep& b) {
  if (a.shape() != b.shape()) fail(errc::invalid_argument, "shape mismatch");
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (a.entries()[i] > b.entries()[i]) return false;
  return true;
}

std::vector<int> kappa_vector(const CosetRep& w, const CosetRep& tau) {
  if (w.shape() != tau.shape()) fail(errc::invalid_argument, "shape mismatch");
  std::vector<int> kappa(w.entries().size());
  for (std::size_t q = 0; q < kappa.size(); ++q) {
    int count = 0;
    for (int t : tau.entries())
      if (w.entries()[q] < t) ++count;
    kappa[q] = count;
  }
  return kappa;
}

std::vector<int> connection_permutation(std::span<const GridPoint> starts,
                                        std::span<const GridPoint> ends) {
  return detail::run_light_and_shadow(starts, ends, ReflectionMultiset{}, {}).sigma;
}

Instance build_instance(const CosetRep& w, const CosetRep& tau) {
  if (w.shape() != tau.shape()) fail(errc::invalid_argument, "shape mismatch");
  if (!bruhat_leq(tau, w))
    fail(errc::not_on_variety,
         "point not on variety: tau " + to_string(tau) + " is not below w " + to_string(w));
  const int d = w.shape().d;
  std::vector<int> kappa = kappa_vector(w, tau);
  std::vector<GridPoint> starts(d), ends(d);
  for (int l = 1; l <= d; ++l) starts[l - 1] = {d + 1 - l, d};
  for (int q = 1; q <= d; ++q)
    ends[q - 1] = {d - kappa[q - 1], kappa[q - 1] + w.entries()[q - 1]};
  std::vector<int> sigma = connection_permutation(starts, ends);
  return Instance{w.shape(), w, tau, std::move(kappa), std::move(starts), std::move(ends),
                  std::move(sigma)};
}

}  // namespace grasmult
