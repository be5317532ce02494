#ifndef GRASMULT_CORE_GRASSMANNIAN_HPP
#define GRASMULT_CORE_GRASSMANNIAN_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace grasmult {

struct GridPoint {
  int x = 0;  // column
  int y = 0;  // row
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::string to_string(GridPoint p);

struct GrassmannianShape {
  int n = 0;  // ambient dimension
  int d = 0;  // subspace dimension, 0 <= d <= n
  friend bool operator==(const GrassmannianShape&, const GrassmannianShape&) = default;
};

// A point of S_n/(S_d x S_{n-d}), stored as the strictly increasing d-vector
// of its first d letters.
class CosetRep {
public:
  CosetRep(GrassmannianShape shape, std::vector<int> entries);

  const GrassmannianShape& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const CosetRep&, const CosetRep&) = default;

private:
  GrassmannianShape shape_;
  std::vector<int> entries_;
};

std::string to_string(const CosetRep& c);

// A full word on {1,...,n} whose first d and last n-d letters both increase.
struct FullPermutation {
  std::vector<int> word;
  friend bool operator==(const FullPermutation&, const FullPermutation&) = default;
};

// The minimal representative of the coset: entries followed by their
// complement in {1,...,n}, ascending.
FullPermutation expand_minimal(const CosetRep& c);

// Induced Bruhat order on cosets: componentwise comparison of the entry
// vectors.
bool bruhat_leq(const CosetRep& a, const CosetRep& b);

// kappa[q-1] = #{ l : w_q < tau_l }.
std::vector<int> kappa_vector(const CosetRep& w, const CosetRep& tau);

// The order in which the nonintersecting families join start points to end
// points. Entry l-1 holds the 1-based index q of the end point reached from
// the l-th start point. Computed by running light-and-shadow on the empty
// multiset; the result is the same for every nonintersecting family.
std::vector<int> connection_permutation(std::span<const GridPoint> starts,
                                        std::span<const GridPoint> ends);

// Everything derived from a Bruhat-comparable pair (w, tau): the kappa
// vector, the path start/end points and the connection permutation.
struct Instance {
  GrassmannianShape shape;
  CosetRep w;
  CosetRep tau;
  std::vector<int> kappa;
  std::vector<GridPoint> starts;  // A_l at index l-1, A_l = (d+1-l, d)
  std::vector<GridPoint> ends;    // E_q at index q-1, E_q = (d-kappa_q, kappa_q + w_q)
  std::vector<int> sigma;         // 1-based; path l ends at E_{sigma[l-1]}
};

// Fails with errc::not_on_variety unless tau <= w.
Instance build_instance(const CosetRep& w, const CosetRep& tau);

}  // namespace grasmult

#endif
