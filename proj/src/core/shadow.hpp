#ifndef GRASMULT_CORE_SHADOW_HPP
#define GRASMULT_CORE_SHADOW_HPP

#include <map>
#include <span>
#include <vector>

#include "grassmannian.hpp"
#include "paths.hpp"

namespace grasmult {

// Multiset of grid points identified with reflections (x, y), 1 <= x <= d < y.
class ReflectionMultiset {
public:
  ReflectionMultiset() = default;
  explicit ReflectionMultiset(std::span<const GridPoint> points);
  ReflectionMultiset(std::initializer_list<GridPoint> points);

  void add(GridPoint p, long long multiplicity = 1);
  long long multiplicity(GridPoint p) const;
  long long size() const;           // counted with multiplicity
  bool empty() const { return counts_.empty(); }
  bool is_set() const;              // all multiplicities 1
  std::vector<GridPoint> support() const;
  const std::map<GridPoint, long long>& counts() const { return counts_; }

  friend bool operator==(const ReflectionMultiset&, const ReflectionMultiset&) = default;

private:
  std::map<GridPoint, long long> counts_;
};

std::string to_string(const ReflectionMultiset& s);

// The bottom-right border of the union of the shadows of {points, from, to},
// where the shadow of (x, y) is {(x', y') : x' <= x, y' >= y}, walked from
// `from` to `to` as a North/East path. Fails with errc::invalid_argument when
// either endpoint is not on that border.
LatticePath shadow_border(std::span<const GridPoint> points, GridPoint from, GridPoint to);

// Light-and-shadow with the sun in the south-east: iteration l walks the
// border of the shadows of the remaining points (plus the unconsumed start
// and end points) from A_l to E_{sigma(l)}, removing every multiset point on
// the walked portion. After d iterations the walks form a nonintersecting
// family covering all of S. Fails with errc::chain_violation when a walk
// misses its end point or points are left over.
PathFamily light_and_shadow(const ReflectionMultiset& s, const Instance& inst);

struct ShadowTrace {
  PathFamily family;
  // Points consumed by iteration l-1: the walk's start and end points plus
  // the multiset points on the walked portion, sorted.
  std::vector<std::vector<GridPoint>> removed;
};

ShadowTrace light_and_shadow_trace(const ReflectionMultiset& s, const Instance& inst);

// The points with y > d on the family's paths, each with multiplicity 1.
ReflectionMultiset family_point_multiset(const Instance& inst, const PathFamily& f);

namespace detail {

struct ShadowRun {
  std::vector<LatticePath> paths;
  std::vector<int> sigma;  // 1-based
  std::vector<std::vector<GridPoint>> removed;
};

// Shared engine behind connection_permutation and light_and_shadow. Each
// iteration stops at the first unconsumed end point on the border; when
// expected_sigma is nonempty a mismatch is a chain-condition violation.
ShadowRun run_light_and_shadow(std::span<const GridPoint> starts,
                               std::span<const GridPoint> ends,
                               const ReflectionMultiset& s,
                               std::span<const int> expected_sigma);

}  // namespace detail

}  // namespace grasmult

#endif
