#include "doctest.h"

#include <algorithm>

#include "core/grassmannian.hpp"
#include "core/verify.hpp"

using namespace grasmult;

namespace {

const GrassmannianShape kFig1Shape{21, 9};
const std::vector<int> kFig1W{4, 6, 7, 13, 14, 17, 19, 20, 21};
const std::vector<int> kFig1Tau{1, 2, 4, 7, 10, 12, 13, 15, 16};

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::internal;
}

}  // namespace

TEST_CASE("coset representatives validate their entries") {
  CHECK_NOTHROW(CosetRep({4, 2}, {1, 2}));
  CHECK_NOTHROW(CosetRep(kFig1Shape, kFig1W));
  CHECK(code_of([] { CosetRep({4, 2}, {2, 2}); }) == errc::invalid_argument);
  CHECK(code_of([] { CosetRep({4, 2}, {4, 2}); }) == errc::invalid_argument);
  CHECK(code_of([] { CosetRep({4, 2}, {0, 2}); }) == errc::invalid_argument);
  CHECK(code_of([] { CosetRep({4, 2}, {2, 5}); }) == errc::invalid_argument);
  CHECK(code_of([] { CosetRep({4, 2}, {1, 2, 3}); }) == errc::invalid_argument);
  CHECK(code_of([] { CosetRep({4, 5}, {1, 2, 3, 4, 5}); }) == errc::invalid_argument);
}

TEST_CASE("expand_minimal appends the ascending complement") {
  CHECK(expand_minimal(CosetRep({4, 2}, {1, 2})).word == std::vector<int>{1, 2, 3, 4});
  CHECK(expand_minimal(CosetRep({4, 2}, {2, 4})).word == std::vector<int>{2, 4, 1, 3});
  CHECK(expand_minimal(CosetRep({5, 2}, {3, 5})).word == std::vector<int>{3, 5, 1, 2, 4});
}

TEST_CASE("expand_minimal is injective and recovers the coset from its prefix") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) {
      std::vector<std::vector<int>> words;
      for (const auto& entries : enumerate_cosets(n, d)) {
        const CosetRep c({n, d}, entries);
        const FullPermutation p = expand_minimal(c);
        REQUIRE(static_cast<int>(p.word.size()) == n);
        CHECK(std::vector<int>(p.word.begin(), p.word.begin() + d) == entries);
        CHECK(std::is_sorted(p.word.begin() + d, p.word.end()));
        words.push_back(p.word);
      }
      std::sort(words.begin(), words.end());
      CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    }
  }
}

TEST_CASE("bruhat_leq compares componentwise") {
  const GrassmannianShape s{4, 2};
  CHECK(bruhat_leq(CosetRep(s, {1, 2}), CosetRep(s, {2, 4})));
  CHECK_FALSE(bruhat_leq(CosetRep(s, {2, 3}), CosetRep(s, {1, 4})));
  CHECK(bruhat_leq(CosetRep(kFig1Shape, kFig1Tau), CosetRep(kFig1Shape, kFig1W)));
  CHECK(code_of([&] { bruhat_leq(CosetRep(s, {1, 2}), CosetRep({5, 2}, {1, 2})); }) ==
        errc::invalid_argument);
}

TEST_CASE("bruhat_leq is a partial order (exhaustive up to n = 7)") {
  for (int n = 1; n <= 7; ++n) {
    for (int d = 0; d <= n; ++d) {
      std::vector<CosetRep> reps;
      for (const auto& entries : enumerate_cosets(n, d)) reps.emplace_back(GrassmannianShape{n, d}, entries);
      for (const auto& a : reps) CHECK(bruhat_leq(a, a));
      for (const auto& a : reps)
        for (const auto& b : reps)
          if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
      for (const auto& a : reps)
        for (const auto& b : reps) {
          if (!bruhat_leq(a, b)) continue;
          for (const auto& c : reps)
            if (bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
        }
    }
  }
}

TEST_CASE("kappa_vector counts larger tau entries") {
  CHECK(kappa_vector(CosetRep(kFig1Shape, kFig1W), CosetRep(kFig1Shape, kFig1Tau)) ==
        std::vector<int>{6, 6, 5, 2, 2, 0, 0, 0, 0});
  CHECK(kappa_vector(CosetRep({4, 2}, {2, 4}), CosetRep({4, 2}, {1, 2})) ==
        std::vector<int>{0, 0});

  // tau = w makes kappa_q the number of later entries: (d-1, ..., 0)
  const CosetRep w({6, 3}, {2, 4, 6});
  CHECK(kappa_vector(w, w) == std::vector<int>{2, 1, 0});
}

TEST_CASE("build_instance populates the figure-1 geometry") {
  const Instance inst =
      build_instance(CosetRep(kFig1Shape, kFig1W), CosetRep(kFig1Shape, kFig1Tau));
  CHECK(inst.kappa == std::vector<int>{6, 6, 5, 2, 2, 0, 0, 0, 0});
  CHECK(inst.ends == std::vector<GridPoint>{{3, 10},
                                            {3, 12},
                                            {4, 12},
                                            {7, 15},
                                            {7, 16},
                                            {9, 17},
                                            {9, 19},
                                            {9, 20},
                                            {9, 21}});
  CHECK(inst.starts.front() == GridPoint{9, 9});
  CHECK(inst.starts.back() == GridPoint{1, 9});
  CHECK(inst.sigma == std::vector<int>{6, 7, 4, 5, 8, 3, 1, 2, 9});
}

TEST_CASE("build_instance on the quadric and its error path") {
  const GrassmannianShape s{4, 2};
  const Instance inst = build_instance(CosetRep(s, {2, 4}), CosetRep(s, {1, 2}));
  CHECK(inst.starts == std::vector<GridPoint>{{2, 2}, {1, 2}});
  CHECK(inst.ends == std::vector<GridPoint>{{2, 2}, {2, 4}});
  CHECK(inst.sigma == std::vector<int>{1, 2});

  CHECK(code_of([&] { build_instance(CosetRep(s, {2, 4}), CosetRep(s, {3, 4})); }) ==
        errc::not_on_variety);
}

TEST_CASE("connection_permutation is forced and deterministic") {
  const Instance inst = build_instance(CosetRep({2, 1}, {2}), CosetRep({2, 1}, {1}));
  CHECK(inst.sigma == std::vector<int>{1});

  const Instance fig1 =
      build_instance(CosetRep(kFig1Shape, kFig1W), CosetRep(kFig1Shape, kFig1Tau));
  CHECK(connection_permutation(fig1.starts, fig1.ends) == fig1.sigma);
  CHECK(connection_permutation(fig1.starts, fig1.ends) == fig1.sigma);
}

TEST_CASE("instance invariants hold on every pair up to n = 5") {
  for_each_instance(5, [](const Instance& inst) {
    const int d = inst.shape.d;
    for (int q = 1; q <= d; ++q) {
      CHECK(inst.kappa[q - 1] <= d - q);
      if (q > 1) CHECK(inst.kappa[q - 2] >= inst.kappa[q - 1]);
      CHECK(inst.ends[q - 1].x >= 1);
      CHECK(inst.ends[q - 1].x <= d);
      CHECK(inst.ends[q - 1].y >= d);
      CHECK(inst.ends[q - 1].y <= inst.shape.n);
    }
    std::vector<GridPoint> ends = inst.ends;
    std::sort(ends.begin(), ends.end());
    CHECK(std::adjacent_find(ends.begin(), ends.end()) == ends.end());

    // sigma is a permutation of 1..d
    std::vector<int> sigma = inst.sigma;
    std::sort(sigma.begin(), sigma.end());
    for (int l = 1; l <= d; ++l) CHECK(sigma[l - 1] == l);
  });
}
