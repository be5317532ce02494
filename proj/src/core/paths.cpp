#include "paths.hpp"

#include <algorithm>

namespace grasmult {

GridPoint LatticePath::end() const {
  GridPoint p = start;
  for (Step s : steps)
    (s == Step::North ? p.y : p.x) += 1;
  return p;
}

std::string step_string(const LatticePath& p) {
  std::string out;
  out.reserve(p.steps.size());
  for (Step s : p.steps) out.push_back(s == Step::North ? 'N' : 'E');
  return out;
}

LatticePath path_from_steps(GridPoint start, const std::string& steps) {
  LatticePath p{start, {}};
  p.steps.reserve(steps.size());
  for (char c : steps) {
    switch (c) {
      case 'N': p.steps.push_back(Step::North); break;
      case 'E': p.steps.push_back(Step::East); break;
      default: fail(errc::invalid_argument, std::string("invalid step letter '") + c + "'");
    }
  }
  return p;
}

std::vector<GridPoint> path_points(const LatticePath& p) {
  std::vector<GridPoint> pts;
  pts.reserve(p.steps.size() + 1);
  GridPoint cur = p.start;
  pts.push_back(cur);
  for (Step s : p.steps) {
    (s == Step::North ? cur.y : cur.x) += 1;
    pts.push_back(cur);
  }
  return pts;
}

int en_turns(const LatticePath& p) {
  int turns = 0;
  for (std::size_t i = 1; i < p.steps.size(); ++i)
    if (p.steps[i - 1] == Step::East && p.steps[i] == Step::North) ++turns;
  return turns;
}

int en_turns_family(const PathFamily& f) {
  int total = 0;
  for (const LatticePath& p : f.paths) total += en_turns(p);
  return total;
}

bigint count_ne_paths(GridPoint a, GridPoint e) {
  const int dx = e.x - a.x;
  const int dy = e.y - a.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

bigint lgv_multiplicity(const Instance& inst) {
  const int d = inst.shape.d;
  if (d == 0) return 1;
  std::vector<std::vector<bigint>> m(d, std::vector<bigint>(d));
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) m[k][l] = count_ne_paths(inst.starts[k], inst.ends[l]);

  // Bareiss fraction-free elimination; every division below is exact.
  int sign = 1;
  bigint prev = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < d; ++r)
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  bigint det = m[d - 1][d - 1];
  if (sign < 0) det = -det;
  return abs(det);
}

namespace {

// Column-by-column backtracking over the d paths, rightmost start first,
// sharing one occupancy grid. North is explored before East.
class FamilySearch {
public:
  FamilySearch(const Instance& inst, std::uint64_t budget,
               const std::function<void(const PathFamily&)>& fn)
      : inst_(inst), budget_(budget), fn_(fn) {
    const int d = inst.shape.d;
    const int n = inst.shape.n;
    width_ = d + 2;
    height_ = n + 2;
    occupied_.assign(static_cast<std::size_t>(width_) * height_, 0);
    current_.paths.reserve(d);
  }

  void run() { place_path(0); }

private:
  char& cell(GridPoint p) { return occupied_[static_cast<std::size_t>(p.x) * height_ + p.y]; }

  void place_path(int l) {
    if (l == inst_.shape.d) {
      fn_(current_);
      return;
    }
    const GridPoint start = inst_.starts[l];
    const GridPoint target = inst_.ends[inst_.sigma[l] - 1];
    current_.paths.push_back(LatticePath{start, {}});
    extend(l, start, target);
    current_.paths.pop_back();
  }

  void extend(int l, GridPoint p, GridPoint target) {
    if (++nodes_ > budget_)
      fail(errc::budget_exceeded,
           "family enumeration exceeded the budget of " + std::to_string(budget_) + " nodes");
    if (cell(p)) return;
    cell(p) = 1;
    if (p == target) {
      place_path(l + 1);
    } else {
      if (p.y + 1 <= target.y) {
        current_.paths[l].steps.push_back(Step::North);
        extend(l, {p.x, p.y + 1}, target);
        current_.paths[l].steps.pop_back();
      }
      if (p.x + 1 <= target.x) {
        current_.paths[l].steps.push_back(Step::East);
        extend(l, {p.x + 1, p.y}, target);
        current_.paths[l].steps.pop_back();
      }
    }
    cell(p) = 0;
  }

  const Instance& inst_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  const std::function<void(const PathFamily&)>& fn_;
  PathFamily current_;
  std::vector<char> occupied_;
  int width_ = 0;
  int height_ = 0;
};

}  // namespace

void for_each_family(const Instance& inst, std::uint64_t budget,
                     const std::function<void(const PathFamily&)>& fn) {
  FamilySearch(inst, budget, fn).run();
}

std::vector<PathFamily> enumerate_families(const Instance& inst, std::uint64_t budget) {
  std::vector<PathFamily> out;
  for_each_family(inst, budget, [&](const PathFamily& f) { out.push_back(f); });
  return out;
}

IntPolynomial turn_polynomial(const Instance& inst, std::uint64_t budget) {
  IntPolynomial poly;
  for_each_family(inst, budget,
                  [&](const PathFamily& f) { poly.add_term(en_turns_family(f), 1); });
  return poly;
}

}  // namespace grasmult
