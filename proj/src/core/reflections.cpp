#include "reflections.hpp"

#include <algorithm>

#include "paths.hpp"

namespace grasmult {

bool is_chain(std::span<const GridPoint> points) {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i - 1].x >= points[i].x || points[i - 1].y <= points[i].y) return false;
  return true;
}

ReflectionChain::ReflectionChain(std::vector<GridPoint> elements)
    : elements_(std::move(elements)) {
  if (!is_chain(elements_))
    fail(errc::invalid_argument, "chain requires strictly increasing x and strictly decreasing y");
}

std::vector<int> apply_chain(const FullPermutation& tau_full, const ReflectionChain& c) {
  std::vector<int> word = tau_full.word;
  const int n = static_cast<int>(word.size());
  for (GridPoint s : c.elements()) {
    if (s.x < 1 || s.x > n || s.y < 1 || s.y > n)
      fail(errc::invalid_argument, "reflection " + to_string(s) + " outside [1,n]x[1,n]");
    std::swap(word[s.x - 1], word[s.y - 1]);
  }
  return word;
}

bool s1_check_naive(const ReflectionMultiset& s, const Instance& inst) {
  const std::vector<GridPoint> support = s.support();  // chains never repeat a point
  if (support.size() >= 63)
    fail(errc::invalid_argument, "naive (S1) check is exhaustive; support too large");
  const int d = inst.shape.d;
  for (GridPoint p : support)
    if (p.x < 1 || p.x > d || p.y <= d || p.y > inst.shape.n)
      fail(errc::invalid_argument,
           "reflection " + to_string(p) + " outside the rectangle 1 <= x <= d < y <= n");
  const FullPermutation tau_full = expand_minimal(inst.tau);

  std::vector<GridPoint> subset;
  std::vector<int> word, prefix;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << support.size()); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < support.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(support[i]);
    if (!is_chain(subset)) continue;  // support is sorted by (x, y) already
    word = tau_full.word;
    for (GridPoint p : subset) std::swap(word[p.x - 1], word[p.y - 1]);
    prefix.assign(word.begin(), word.begin() + d);
    std::sort(prefix.begin(), prefix.end());
    for (int q = 0; q < d; ++q)
      if (prefix[q] > inst.w.entries()[q]) return false;
  }
  return true;
}

namespace detail {

int longest_chain_in_region(std::span<const GridPoint> support_sorted, const Region& r) {
  // Longest strictly-increasing-x / strictly-decreasing-y subsequence among
  // the points inside the region; quadratic DP over the (x, y)-sorted input.
  std::vector<GridPoint> pts;
  for (GridPoint p : support_sorted)
    if (r.contains(p)) pts.push_back(p);
  int best = 0;
  std::vector<int> dp(pts.size(), 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (pts[j].x < pts[i].x && pts[j].y > pts[i].y) dp[i] = std::max(dp[i], dp[j] + 1);
    best = std::max(best, dp[i]);
  }
  return best;
}

bool chain_condition_support(std::span<const GridPoint> support_sorted, const Instance& inst) {
  const int d = inst.shape.d;
  for (int q = 1; q <= d; ++q) {
    const int bound = d - inst.kappa[q - 1] - q;
    if (longest_chain_in_region(support_sorted, Region{inst.ends[q - 1]}) > bound) return false;
  }
  return true;
}

}  // namespace detail

int longest_chain_in_region(const ReflectionMultiset& s, const Region& r) {
  return detail::longest_chain_in_region(s.support(), r);
}

bool chain_condition(const ReflectionMultiset& s, const Instance& inst) {
  return detail::chain_condition_support(s.support(), inst);
}

namespace {

std::vector<GridPoint> full_rectangle(const Instance& inst) {
  std::vector<GridPoint> out;
  for (int x = 1; x <= inst.shape.d; ++x)
    for (int y = inst.shape.d + 1; y <= inst.shape.n; ++y) out.push_back({x, y});
  return out;
}

// S (a sorted point set passing the chain condition) is maximal iff no
// rectangle point outside it can be added without breaking the condition.
bool is_maximal(const std::vector<GridPoint>& support, const Instance& inst,
                const std::vector<GridPoint>& rectangle) {
  std::vector<GridPoint> probe;
  probe.reserve(support.size() + 1);
  for (GridPoint p : rectangle) {
    if (std::binary_search(support.begin(), support.end(), p)) continue;
    probe.assign(support.begin(), support.end());
    probe.insert(std::upper_bound(probe.begin(), probe.end(), p), p);
    if (detail::chain_condition_support(probe, inst)) return false;
  }
  return true;
}

}  // namespace

bool s2_check(const ReflectionMultiset& s, const Instance& inst) {
  if (!s.is_set()) fail(errc::invalid_argument, "(S2) applies to sets, not proper multisets");
  if (!chain_condition(s, inst))
    fail(errc::invalid_argument, "(S2) requires a set satisfying (S1): " + to_string(s));
  return is_maximal(s.support(), inst, full_rectangle(inst));
}

std::vector<ReflectionMultiset> enumerate_s1s2_sets(const Instance& inst, std::uint64_t budget,
                                                    S1S2Universe universe) {
  std::vector<GridPoint> points;
  if (universe == S1S2Universe::FullRectangle) {
    points = full_rectangle(inst);
  } else {
    // Every maximal set is the point set of some family, so the union of the
    // family point sets carries them all.
    std::vector<GridPoint> seen;
    for_each_family(inst, budget, [&](const PathFamily& f) {
      for (const LatticePath& p : f.paths)
        for (GridPoint pt : path_points(p))
          if (pt.y > inst.shape.d) seen.push_back(pt);
    });
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    points = std::move(seen);
  }

  const std::vector<GridPoint> rectangle = full_rectangle(inst);
  std::vector<ReflectionMultiset> out;
  std::vector<GridPoint> current;
  std::uint64_t nodes = 0;

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (++nodes > budget)
      fail(errc::budget_exceeded,
           "reflection-set enumeration exceeded the budget of " + std::to_string(budget) +
               " nodes");
    if (i == points.size()) {
      if (is_maximal(current, inst, rectangle)) {
        ReflectionMultiset s;
        for (GridPoint p : current) s.add(p);
        out.push_back(std::move(s));
      }
      return;
    }
    current.push_back(points[i]);
    if (detail::chain_condition_support(current, inst)) self(self, i + 1);
    current.pop_back();
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace grasmult
