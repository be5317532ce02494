#ifndef GRASMULT_CORE_VERIFY_HPP
#define GRASMULT_CORE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "grassmannian.hpp"

namespace grasmult {

// All strictly increasing d-subsets of {1,...,n}, lexicographically.
std::vector<std::vector<int>> enumerate_cosets(int n, int d);

// Every Bruhat-comparable pair tau <= w over all shapes with 1 <= n <= max_n,
// smallest first.
void for_each_instance(int max_n, const std::function<void(const Instance&)>& fn);

struct VerifyOptions {
  int max_n = 5;
  std::uint64_t budget = kDefaultBudget;
  int chain_support_limit = 4;  // exhaustion bound for the naive-(S1) cross-check
  int hilbert_max_m = 3;
  bool stop_at_first_failure = true;
};

struct VerifyResult {
  std::uint64_t instances = 0;
  std::uint64_t families = 0;
  std::uint64_t maximal_sets = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string report() const;
};

// Cross-checks every engine against every other on all instances up to
// max_n: multiplicity by determinant, path enumeration and reflection-set
// enumeration; the light-and-shadow round trips in both directions; the
// chain-condition/naive-(S1) equivalence at bounded support size; and the
// Hilbert-function counting identity for m <= hilbert_max_m.
VerifyResult run_verification(const VerifyOptions& opts);

}  // namespace grasmult

#endif
