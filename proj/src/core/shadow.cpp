#include "shadow.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace grasmult {

ReflectionMultiset::ReflectionMultiset(std::span<const GridPoint> points) {
  for (GridPoint p : points) add(p);
}

ReflectionMultiset::ReflectionMultiset(std::initializer_list<GridPoint> points) {
  for (GridPoint p : points) add(p);
}

void ReflectionMultiset::add(GridPoint p, long long multiplicity) {
  if (multiplicity <= 0) fail(errc::invalid_argument, "multiplicities must be positive");
  counts_[p] += multiplicity;
}

long long ReflectionMultiset::multiplicity(GridPoint p) const {
  auto it = counts_.find(p);
  return it == counts_.end() ? 0 : it->second;
}

long long ReflectionMultiset::size() const {
  long long total = 0;
  for (const auto& [p, c] : counts_) total += c;
  return total;
}

bool ReflectionMultiset::is_set() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](const auto& pc) { return pc.second == 1; });
}

std::vector<GridPoint> ReflectionMultiset::support() const {
  std::vector<GridPoint> out;
  out.reserve(counts_.size());
  for (const auto& [p, c] : counts_) out.push_back(p);
  return out;
}

std::string to_string(const ReflectionMultiset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, c] : s.counts()) {
    if (!first) os << ',';
    first = false;
    os << to_string(p);
    if (c > 1) os << 'x' << c;
  }
  os << '}';
  return os.str();
}

namespace {

constexpr int kNoColumn = std::numeric_limits<int>::min();

// Rightmost shadow column per row, cumulative from the bottom row up:
// staircase[y - y0] = max{ p.x : p among the generators, p.y <= y }.
struct Staircase {
  int y0 = 0;
  int ymax = 0;
  std::vector<int> column;

  int at(int y) const {
    if (column.empty() || y < y0) return kNoColumn;
    if (y > ymax) return column.back();
    return column[y - y0];
  }
};

template <typename PointRange>
Staircase build_staircase(const PointRange& points) {
  Staircase s;
  bool any = false;
  int ymin = 0;
  for (const GridPoint& p : points) {
    if (!any) {
      ymin = p.y;
      s.ymax = p.y;
      any = true;
    } else {
      ymin = std::min(ymin, p.y);
      s.ymax = std::max(s.ymax, p.y);
    }
  }
  if (!any) return s;
  s.y0 = ymin;
  s.column.assign(s.ymax - s.y0 + 1, kNoColumn);
  for (const GridPoint& p : points)
    s.column[p.y - s.y0] = std::max(s.column[p.y - s.y0], p.x);
  for (std::size_t i = 1; i < s.column.size(); ++i)
    s.column[i] = std::max(s.column[i], s.column[i - 1]);
  return s;
}

// Walk the border north from `from`, visiting each point in order and asking
// `stop` whether to halt there. Entering a row is a North step at the old
// column followed by East steps out to the row's staircase column.
template <typename StopFn>
bool walk_border(const Staircase& s, GridPoint from, const StopFn& stop,
                 std::vector<Step>& steps, std::vector<GridPoint>& visited) {
  int x = from.x;
  int y = from.y;
  steps.clear();
  visited.clear();
  visited.push_back({x, y});
  if (stop(GridPoint{x, y})) return true;
  while (y <= s.ymax) {
    ++y;
    steps.push_back(Step::North);
    visited.push_back({x, y});
    if (stop(GridPoint{x, y})) return true;
    const int target = s.at(y);
    while (x < target) {
      ++x;
      steps.push_back(Step::East);
      visited.push_back({x, y});
      if (stop(GridPoint{x, y})) return true;
    }
  }
  return false;
}

}  // namespace

LatticePath shadow_border(std::span<const GridPoint> points, GridPoint from, GridPoint to) {
  std::vector<GridPoint> generators(points.begin(), points.end());
  generators.push_back(from);
  generators.push_back(to);
  Staircase s = build_staircase(generators);
  if (s.at(from.y) != from.x)
    fail(errc::invalid_argument, "start point " + to_string(from) + " is not on the border");
  std::vector<Step> steps;
  std::vector<GridPoint> visited;
  bool reached = walk_border(s, from, [&](GridPoint p) { return p == to; }, steps, visited);
  if (!reached)
    fail(errc::invalid_argument, "end point " + to_string(to) + " is not reachable on the border");
  return LatticePath{from, std::move(steps)};
}

namespace detail {

ShadowRun run_light_and_shadow(std::span<const GridPoint> starts,
                               std::span<const GridPoint> ends,
                               const ReflectionMultiset& s,
                               std::span<const int> expected_sigma) {
  const int d = static_cast<int>(starts.size());
  if (ends.size() != starts.size()) fail(errc::internal, "start/end point count mismatch");

  ShadowRun out;
  std::map<GridPoint, long long> remaining = s.counts();
  std::map<GridPoint, int> open_ends;  // point -> 1-based q
  for (int q = 1; q <= d; ++q) {
    if (!open_ends.emplace(ends[q - 1], q).second)
      fail(errc::internal, "end points are not pairwise distinct");
  }

  std::vector<GridPoint> active;
  std::vector<Step> steps;
  std::vector<GridPoint> visited;
  for (int l = 1; l <= d; ++l) {
    active.clear();
    for (int m = l; m <= d; ++m) active.push_back(starts[m - 1]);
    for (const auto& [p, q] : open_ends) active.push_back(p);
    for (const auto& [p, c] : remaining) active.push_back(p);
    Staircase stair = build_staircase(active);
    if (stair.at(starts[l - 1].y) != starts[l - 1].x)
      fail(errc::internal, "start point " + to_string(starts[l - 1]) + " left the border");

    int hit_q = 0;
    bool reached = walk_border(
        stair, starts[l - 1],
        [&](GridPoint p) {
          auto it = open_ends.find(p);
          if (it == open_ends.end()) return false;
          hit_q = it->second;
          return true;
        },
        steps, visited);
    if (!reached)
      fail(errc::chain_violation,
           "iteration " + std::to_string(l) + ": border from " + to_string(starts[l - 1]) +
               " reaches no end point");
    if (!expected_sigma.empty() && hit_q != expected_sigma[l - 1])
      fail(errc::chain_violation, "iteration " + std::to_string(l) + ": border hits E_" +
                                      std::to_string(hit_q) + " instead of E_" +
                                      std::to_string(expected_sigma[l - 1]));

    std::vector<GridPoint> removed{visited.front(), visited.back()};
    for (GridPoint p : visited) {
      auto it = remaining.find(p);
      if (it != remaining.end()) {
        removed.push_back(p);
        remaining.erase(it);  // all copies go at once
      }
    }
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

    out.sigma.push_back(hit_q);
    out.paths.push_back(LatticePath{starts[l - 1], steps});
    out.removed.push_back(std::move(removed));
    open_ends.erase(ends[hit_q - 1]);
  }

  if (!remaining.empty()) {
    ReflectionMultiset leftover;
    for (const auto& [p, c] : remaining) leftover.add(p, c);
    fail(errc::chain_violation,
         "points not covered after " + std::to_string(d) + " iterations: " + to_string(leftover));
  }
  return out;
}

}  // namespace detail

PathFamily light_and_shadow(const ReflectionMultiset& s, const Instance& inst) {
  return light_and_shadow_trace(s, inst).family;
}

ShadowTrace light_and_shadow_trace(const ReflectionMultiset& s, const Instance& inst) {
  const int d = inst.shape.d;
  for (const auto& [p, c] : s.counts()) {
    if (p.x < 1 || p.x > d || p.y <= d)
      fail(errc::invalid_argument,
           "reflection " + to_string(p) + " outside the rectangle 1 <= x <= d < y");
  }
  detail::ShadowRun run = detail::run_light_and_shadow(inst.starts, inst.ends, s, inst.sigma);
  return ShadowTrace{PathFamily{std::move(run.paths)}, std::move(run.removed)};
}

ReflectionMultiset family_point_multiset(const Instance& inst, const PathFamily& f) {
  ReflectionMultiset out;
  for (const LatticePath& p : f.paths)
    for (GridPoint pt : path_points(p))
      if (pt.y > inst.shape.d) out.add(pt);
  return out;
}

}  // namespace grasmult
