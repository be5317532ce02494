#include "verify.hpp"

#include <algorithm>
#include <sstream>

#include "hilbert.hpp"
#include "paths.hpp"
#include "reflections.hpp"
#include "shadow.hpp"

namespace grasmult {

std::vector<std::vector<int>> enumerate_cosets(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d);
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == d) {
      out.push_back(cur);
      return;
    }
    for (int v = low; v <= n - (d - pos - 1); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

void for_each_instance(int max_n, const std::function<void(const Instance&)>& fn) {
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 0; d <= n; ++d) {
      const GrassmannianShape shape{n, d};
      const auto cosets = enumerate_cosets(n, d);
      for (const auto& w_entries : cosets) {
        const CosetRep w(shape, w_entries);
        for (const auto& tau_entries : cosets) {
          const CosetRep tau(shape, tau_entries);
          if (!bruhat_leq(tau, w)) continue;
          fn(build_instance(w, tau));
        }
      }
    }
  }
}

namespace {

std::string describe(const Instance& inst) {
  std::ostringstream os;
  os << "n=" << inst.shape.n << " d=" << inst.shape.d << " w=" << to_string(inst.w)
     << " tau=" << to_string(inst.tau);
  return os.str();
}

std::vector<std::vector<GridPoint>> sorted_supports(const std::vector<ReflectionMultiset>& sets) {
  std::vector<std::vector<GridPoint>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.support());
  std::sort(out.begin(), out.end());
  return out;
}

class Verifier {
public:
  Verifier(const VerifyOptions& opts, VerifyResult& result) : opts_(opts), result_(result) {}

  void check(const Instance& inst) {
    if (!result_.failures.empty() && opts_.stop_at_first_failure) return;
    result_.instances += 1;
    const std::string where = describe(inst);

    const bigint mult = lgv_multiplicity(inst);
    const std::vector<PathFamily> families = enumerate_families(inst, opts_.budget);
    result_.families += families.size();
    if (bigint(families.size()) != mult) {
      report(where, "path-family count " + std::to_string(families.size()) +
                        " != determinant multiplicity " + to_decimal(mult));
      return;
    }

    const auto s1s2 = enumerate_s1s2_sets(inst, opts_.budget, S1S2Universe::FullRectangle);
    result_.maximal_sets += s1s2.size();
    if (bigint(s1s2.size()) != mult) {
      report(where, "reflection-set count " + std::to_string(s1s2.size()) +
                        " != determinant multiplicity " + to_decimal(mult));
      return;
    }
    const auto restricted = enumerate_s1s2_sets(inst, opts_.budget, S1S2Universe::PathRestricted);
    if (sorted_supports(restricted) != sorted_supports(s1s2)) {
      report(where, "path-restricted reflection search disagrees with the full rectangle");
      return;
    }

    // family point sets and maximal sets are the same collection
    std::vector<std::vector<GridPoint>> family_sets;
    family_sets.reserve(families.size());
    for (const PathFamily& f : families)
      family_sets.push_back(family_point_multiset(inst, f).support());
    std::sort(family_sets.begin(), family_sets.end());
    if (family_sets != sorted_supports(s1s2)) {
      report(where, "family point sets differ from the (S1)+(S2) sets");
      return;
    }

    const long long T = pole_order(inst);
    IntPolynomial turn_poly;
    for (const PathFamily& f : families) {
      const ReflectionMultiset pts = family_point_multiset(inst, f);
      if (pts.size() != T) {
        report(where, "family has " + std::to_string(pts.size()) + " points above y=d, expected " +
                          std::to_string(T));
        return;
      }
      PathFamily back = light_and_shadow(pts, inst);
      if (!(back == f)) {
        report(where, "light-and-shadow round trip lost a family");
        return;
      }
      turn_poly.add_term(en_turns_family(f), 1);
    }
    for (const ReflectionMultiset& s : s1s2) {
      const PathFamily f = light_and_shadow(s, inst);
      if (!(family_point_multiset(inst, f) == s)) {
        report(where, "maximal set " + to_string(s) + " does not round trip");
        return;
      }
    }
    if (turn_poly.evaluate_at_one() != mult) {
      report(where, "turn polynomial at z=1 is " + to_decimal(turn_poly.evaluate_at_one()) +
                        ", expected " + to_decimal(mult));
      return;
    }

    if (inst.tau == inst.w) {
      long long expected_T = 0;
      for (std::size_t l = 0; l < inst.w.entries().size(); ++l)
        expected_T += inst.w.entries()[l] - static_cast<long long>(l) - 1;
      if (mult != 1 || !(turn_poly == IntPolynomial::one()) || T != expected_T) {
        report(where, "smooth point expectations violated");
        return;
      }
    }

    if (!check_chain_equivalence(inst, where)) return;

    const HilbertSeries hs{turn_poly, T, true};
    for (long long m = 0; m <= opts_.hilbert_max_m; ++m) {
      const bigint direct = hilbert_function(hs, m);
      const bigint oracle = hilbert_function_oracle(inst, m, opts_.budget);
      if (direct != oracle) {
        report(where, "hilbert function at m=" + std::to_string(m) + " is " + to_decimal(direct) +
                          ", oracle says " + to_decimal(oracle));
        return;
      }
    }
  }

private:
  bool check_chain_equivalence(const Instance& inst, const std::string& where) {
    std::vector<GridPoint> rectangle;
    for (int x = 1; x <= inst.shape.d; ++x)
      for (int y = inst.shape.d + 1; y <= inst.shape.n; ++y) rectangle.push_back({x, y});
    std::vector<GridPoint> subset;
    bool ok = true;
    auto rec = [&](auto&& self, std::size_t next) -> void {
      if (!ok) return;
      ReflectionMultiset s;
      for (GridPoint p : subset) s.add(p);
      if (chain_condition(s, inst) != s1_check_naive(s, inst)) {
        report(where, "chain condition and naive (S1) disagree on " + to_string(s));
        ok = false;
        return;
      }
      if (static_cast<int>(subset.size()) >= opts_.chain_support_limit) return;
      for (std::size_t i = next; i < rectangle.size(); ++i) {
        subset.push_back(rectangle[i]);
        self(self, i + 1);
        subset.pop_back();
      }
    };
    rec(rec, 0);
    return ok;
  }

  void report(const std::string& where, const std::string& what) {
    result_.failures.push_back(where + ": " + what);
  }

  const VerifyOptions& opts_;
  VerifyResult& result_;
};

}  // namespace

std::string VerifyResult::report() const {
  std::ostringstream os;
  os << "instances checked: " << instances << "\n"
     << "families checked:  " << families << "\n"
     << "maximal sets:      " << maximal_sets << "\n";
  if (failures.empty()) {
    os << "all cross-checks passed\n";
  } else {
    for (const std::string& f : failures) os << "MISMATCH " << f << "\n";
  }
  return os.str();
}

VerifyResult run_verification(const VerifyOptions& opts) {
  VerifyResult result;
  Verifier verifier(opts, result);
  for_each_instance(opts.max_n, [&](const Instance& inst) { verifier.check(inst); });
  return result;
}

}  // namespace grasmult
