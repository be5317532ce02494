#ifndef GRASMULT_CORE_REFLECTIONS_HPP
#define GRASMULT_CORE_REFLECTIONS_HPP

#include <cstdint>
#include <vector>

#include "grassmannian.hpp"
#include "shadow.hpp"

namespace grasmult {

// Points with strictly increasing x and strictly decreasing y; as
// transpositions (x, y) they pairwise commute.
class ReflectionChain {
public:
  ReflectionChain() = default;
  explicit ReflectionChain(std::vector<GridPoint> elements);  // validates

  const std::vector<GridPoint>& elements() const { return elements_; }

private:
  std::vector<GridPoint> elements_;
};

bool is_chain(std::span<const GridPoint> points);

// Region weakly to the left of and strictly above the anchor.
struct Region {
  GridPoint anchor;
  bool contains(GridPoint p) const { return p.x <= anchor.x && p.y > anchor.y; }
};

// Word obtained from the full word of tau by swapping positions x and y for
// each chain element; chain elements commute, so list order is irrelevant.
std::vector<int> apply_chain(const FullPermutation& tau_full, const ReflectionChain& c);

// (S1) by definition: every chain drawn from the support of S keeps the
// sorted d-prefix of tau * (product of swaps) componentwise below w.
// Exhaustive over chains; use chain_condition for anything but oracle work.
bool s1_check_naive(const ReflectionMultiset& s, const Instance& inst);

// Longest chain among the support points of S inside the region.
int longest_chain_in_region(const ReflectionMultiset& s, const Region& r);

// Fast (S1) equivalent: for every q, no chain inside R(E_q) longer than
// d - kappa_q - q.
bool chain_condition(const ReflectionMultiset& s, const Instance& inst);

// (S2): no reflection of the rectangle 1 <= x <= d < y <= n can be added to S
// without breaking (S1). Requires S to be a set satisfying (S1).
bool s2_check(const ReflectionMultiset& s, const Instance& inst);

enum class S1S2Universe {
  PathRestricted,  // subsets of the union of the enumerated families' points
  FullRectangle,   // subsets of the whole rectangle (oracle mode)
};

// All sets satisfying (S1) and (S2); their number is the multiplicity.
// Maximality is always probed against the full rectangle.
std::vector<ReflectionMultiset> enumerate_s1s2_sets(
    const Instance& inst, std::uint64_t budget = kDefaultBudget,
    S1S2Universe universe = S1S2Universe::PathRestricted);

namespace detail {

// Same as the public functions but over a plain support, sorted by (x, y).
int longest_chain_in_region(std::span<const GridPoint> support_sorted, const Region& r);
bool chain_condition_support(std::span<const GridPoint> support_sorted, const Instance& inst);

}  // namespace detail

}  // namespace grasmult

#endif
