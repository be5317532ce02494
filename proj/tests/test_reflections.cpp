#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "core/paths.hpp"
#include "core/reflections.hpp"
#include "core/shadow.hpp"
#include "core/verify.hpp"

using namespace grasmult;

namespace {

Instance quadric() {
  return build_instance(CosetRep({4, 2}, {2, 4}), CosetRep({4, 2}, {1, 2}));
}

std::vector<GridPoint> rectangle(const Instance& inst) {
  std::vector<GridPoint> out;
  for (int x = 1; x <= inst.shape.d; ++x)
    for (int y = inst.shape.d + 1; y <= inst.shape.n; ++y) out.push_back({x, y});
  return out;
}

std::vector<std::vector<GridPoint>> supports_of(const std::vector<ReflectionMultiset>& sets) {
  std::vector<std::vector<GridPoint>> out;
  for (const auto& s : sets) out.push_back(s.support());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("apply_chain swaps the chain positions") {
  const FullPermutation id4 = expand_minimal(CosetRep({4, 4}, {1, 2, 3, 4}));
  CHECK(apply_chain(id4, ReflectionChain({{1, 4}, {2, 3}})) == std::vector<int>{4, 3, 2, 1});
  CHECK(apply_chain(id4, ReflectionChain()) == id4.word);

  const FullPermutation tau = expand_minimal(CosetRep({5, 2}, {1, 2}));
  CHECK(apply_chain(tau, ReflectionChain({{2, 4}})) == std::vector<int>{1, 4, 3, 2, 5});

  CHECK_THROWS_AS(apply_chain(tau, ReflectionChain({{2, 9}})), error);
}

TEST_CASE("chains require increasing x and decreasing y") {
  CHECK_NOTHROW(ReflectionChain({{1, 4}, {2, 3}}));
  CHECK_THROWS_AS(ReflectionChain({{1, 3}, {2, 4}}), error);
  CHECK_THROWS_AS(ReflectionChain({{1, 4}, {1, 3}}), error);
  CHECK(is_chain(std::vector<GridPoint>{{1, 4}, {2, 3}}));
  CHECK_FALSE(is_chain(std::vector<GridPoint>{{1, 3}, {2, 4}}));
}

TEST_CASE("s1_check_naive on the quadric") {
  const Instance inst = quadric();
  CHECK_FALSE(s1_check_naive({{1, 4}, {2, 3}}, inst));
  CHECK(s1_check_naive({}, inst));
  CHECK(s1_check_naive({{2, 3}}, inst));
}

TEST_CASE("longest_chain_in_region") {
  CHECK(longest_chain_in_region({}, Region{{2, 2}}) == 0);
  CHECK(longest_chain_in_region({{1, 4}, {2, 3}}, Region{{2, 2}}) == 2);
  CHECK(longest_chain_in_region({{1, 3}, {2, 4}}, Region{{2, 2}}) == 1);
  // points outside the region do not count
  CHECK(longest_chain_in_region({{1, 4}, {2, 3}}, Region{{1, 2}}) == 1);
}

TEST_CASE("chain_condition on the quadric") {
  const Instance inst = quadric();
  for (int x = 1; x <= 2; ++x)
    for (int y = 3; y <= 4; ++y) CHECK(chain_condition({GridPoint{x, y}}, inst));
  CHECK_FALSE(chain_condition({{1, 4}, {2, 3}}, inst));
  CHECK(chain_condition({}, inst));
}

TEST_CASE("s2_check demands maximality") {
  const Instance inst = quadric();
  CHECK(s2_check({{1, 3}, {1, 4}, {2, 4}}, inst));
  CHECK(s2_check({{1, 3}, {2, 3}, {2, 4}}, inst));
  CHECK_FALSE(s2_check({{2, 3}}, inst));

  CHECK_THROWS_AS(s2_check({{1, 4}, {2, 3}}, inst), error);  // fails (S1)
  ReflectionMultiset doubled;
  doubled.add({2, 3}, 2);
  CHECK_THROWS_AS(s2_check(doubled, inst), error);  // not a set
}

TEST_CASE("enumerate_s1s2_sets finds exactly the maximal sets") {
  const Instance inst = quadric();
  for (S1S2Universe universe : {S1S2Universe::FullRectangle, S1S2Universe::PathRestricted}) {
    const auto sets = enumerate_s1s2_sets(inst, kDefaultBudget, universe);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == ReflectionMultiset{{1, 3}, {1, 4}, {2, 4}});
    CHECK(sets[1] == ReflectionMultiset{{1, 3}, {2, 3}, {2, 4}});
  }

  const CosetRep w({5, 2}, {3, 5});
  CHECK(enumerate_s1s2_sets(build_instance(w, CosetRep({5, 2}, {1, 2}))).size() == 2);
  CHECK(enumerate_s1s2_sets(build_instance(w, w)).size() == 1);
}

TEST_CASE("reflection search respects its budget") {
  const Instance inst = build_instance(CosetRep({8, 4}, {5, 6, 7, 8}),
                                       CosetRep({8, 4}, {1, 2, 3, 4}));
  try {
    enumerate_s1s2_sets(inst, 5, S1S2Universe::FullRectangle);
    FAIL("expected budget_exceeded");
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
}

TEST_CASE("chain condition is equivalent to naive (S1), support up to 4, n up to 5") {
  for_each_instance(5, [](const Instance& inst) {
    const std::vector<GridPoint> rect = rectangle(inst);
    std::vector<GridPoint> subset;
    auto rec = [&](auto&& self, std::size_t next) -> void {
      ReflectionMultiset s;
      for (GridPoint p : subset) s.add(p);
      CHECK(chain_condition(s, inst) == s1_check_naive(s, inst));
      if (subset.size() >= 4) return;
      for (std::size_t i = next; i < rect.size(); ++i) {
        subset.push_back(rect[i]);
        self(self, i + 1);
        subset.pop_back();
      }
    };
    rec(rec, 0);
  });
}

TEST_CASE("(S1) depends only on the support") {
  std::mt19937 rng(7241);
  for_each_instance(4, [&](const Instance& inst) {
    const std::vector<GridPoint> rect = rectangle(inst);
    for (int trial = 0; trial < 8; ++trial) {
      ReflectionMultiset flat, inflated;
      for (GridPoint p : rect)
        if (rng() % 2) {
          flat.add(p);
          inflated.add(p, 1 + static_cast<long long>(rng() % 4));
        }
      CHECK(s1_check_naive(flat, inst) == s1_check_naive(inflated, inst));
      CHECK(chain_condition(flat, inst) == chain_condition(inflated, inst));
    }
  });
}

TEST_CASE("the maximal sets are the family point sets (exhaustive up to n = 5)") {
  for_each_instance(5, [](const Instance& inst) {
    const auto families = enumerate_families(inst);
    const auto sets = enumerate_s1s2_sets(inst, kDefaultBudget, S1S2Universe::FullRectangle);
    CHECK(bigint(sets.size()) == lgv_multiplicity(inst));

    std::vector<std::vector<GridPoint>> family_sets;
    for (const PathFamily& f : families)
      family_sets.push_back(family_point_multiset(inst, f).support());
    std::sort(family_sets.begin(), family_sets.end());
    CHECK(family_sets == supports_of(sets));

    // every enumerated set passes s2_check
    for (const auto& s : sets) CHECK(s2_check(s, inst));
  });
}

TEST_CASE("the chain bound counts the paths passing above each end point") {
  for_each_instance(5, [](const Instance& inst) {
    const int d = inst.shape.d;
    for (const PathFamily& f : enumerate_families(inst)) {
      for (int q = 1; q <= d; ++q) {
        const GridPoint e = inst.ends[q - 1];
        int passing = 0;
        for (int l = 1; l <= d; ++l) {
          const GridPoint start = inst.starts[l - 1];
          const GridPoint target = inst.ends[inst.sigma[l - 1] - 1];
          if (!(start.x < e.x && target.x >= e.x)) continue;
          for (GridPoint pt : path_points(f.paths[l - 1]))
            if (pt.x == e.x && pt.y > e.y) {
              ++passing;
              break;
            }
        }
        CHECK(passing == d - inst.kappa[q - 1] - q);
      }
    }
  });
}
