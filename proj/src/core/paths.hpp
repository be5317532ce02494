#ifndef GRASMULT_CORE_PATHS_HPP
#define GRASMULT_CORE_PATHS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "grassmannian.hpp"
#include "hilbert.hpp"

namespace grasmult {

enum class Step : unsigned char { North, East };

struct LatticePath {
  GridPoint start;
  std::vector<Step> steps;

  GridPoint end() const;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// "N"/"E" letters, one per step; empty for a zero-length path.
std::string step_string(const LatticePath& p);
LatticePath path_from_steps(GridPoint start, const std::string& steps);

// All lattice points visited, start and end inclusive.
std::vector<GridPoint> path_points(const LatticePath& p);

// Number of points where an East step is immediately followed by a North step.
int en_turns(const LatticePath& p);

// A nonintersecting family: paths[l-1] joins A_l to E_{sigma(l)} of its
// instance.
struct PathFamily {
  std::vector<LatticePath> paths;
  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

int en_turns_family(const PathFamily& f);

// Number of North/East paths from a to e.
bigint count_ne_paths(GridPoint a, GridPoint e);

// Multiplicity as |det M| with M[k][l] = count_ne_paths(A_{k+1}, E_{l+1}),
// evaluated by fraction-free (Bareiss) elimination over exact integers.
bigint lgv_multiplicity(const Instance& inst);

// Visit every nonintersecting family exactly once, in deterministic order:
// paths are placed for l = 1..d and each path explores North before East.
// Throws errc::budget_exceeded when the search tree outgrows the budget.
void for_each_family(const Instance& inst, std::uint64_t budget,
                     const std::function<void(const PathFamily&)>& fn);

std::vector<PathFamily> enumerate_families(const Instance& inst,
                                           std::uint64_t budget = kDefaultBudget);

// Coefficient of z^t counts the families with exactly t EN-turns.
IntPolynomial turn_polynomial(const Instance& inst, std::uint64_t budget = kDefaultBudget);

}  // namespace grasmult

#endif
