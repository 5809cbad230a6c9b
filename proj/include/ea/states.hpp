#pragma once

// States as exact rational vectors indexed by element. The state space is the
// polytope cut out by s(0)=0, s(1)=1, additivity across every stored sum
// entry, and 0 <= s(e) <= 1; extremal states are its vertices.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ea/core.hpp"
#include "ea/polytope.hpp"

namespace ea {

struct StateSpace {
  Parameterization param;
  std::vector<IneqRow> rows;      // bound rows of every element, in parameter space
  std::vector<RatVec> vertices;   // full element-indexed vectors, sorted
  int affine_dim = -1;            // -1 when no state exists
};

inline std::vector<SparseEq> state_equations(const Table& t) {
  std::vector<SparseEq> eqs;
  SparseEq z;
  z.coef[t.zero()] = 1;
  z.cst = 0;
  eqs.push_back(z);
  SparseEq u;
  u.coef[t.one()] = 1;
  u.cst = 1;
  eqs.push_back(u);
  t.for_each_entry([&](Elem a, Elem b, Elem c) {
    SparseEq e;
    e.coef[c] += 1;
    e.coef[a] -= 1;
    e.coef[b] -= 1;
    for (auto it = e.coef.begin(); it != e.coef.end();)
      it = (it->second == 0) ? e.coef.erase(it) : std::next(it);
    if (!e.coef.empty()) eqs.push_back(std::move(e));
  });
  return eqs;
}

// The polytope of states satisfying extra equality constraints on top of the
// table's own; the plain state space passes none.
inline StateSpace state_space_with(const Table& t, const std::vector<SparseEq>& extra) {
  StateSpace ss;
  std::vector<SparseEq> eqs = state_equations(t);
  eqs.insert(eqs.end(), extra.begin(), extra.end());
  ss.param = eliminate(t.size(), eqs);
  if (!ss.param.feasible) return ss;

  int d = int(ss.param.free_vars.size());
  for (Elem e = 0; e < t.size(); ++e) {
    const AffineExpr& ex = ss.param.exprs[size_t(e)];
    IneqRow lo{RatVec(size_t(d), Rat(0)), ex.cst};  // expr >= 0
    for (const auto& [p, c] : ex.coef) lo.a[size_t(p)] = c;
    IneqRow hi{RatVec(size_t(d), Rat(0)), Rat(1) - ex.cst};  // expr <= 1
    for (const auto& [p, c] : ex.coef) hi.a[size_t(p)] = -c;
    ss.rows.push_back(std::move(lo));
    ss.rows.push_back(std::move(hi));
  }

  for (const RatVec& t_pt : dd_vertices(d, ss.rows)) {
    RatVec s(size_t(t.size()));
    for (Elem e = 0; e < t.size(); ++e) {
      const AffineExpr& ex = ss.param.exprs[size_t(e)];
      Rat v = ex.cst;
      for (const auto& [p, c] : ex.coef) v += c * t_pt[size_t(p)];
      s[size_t(e)] = v;
    }
    ss.vertices.push_back(std::move(s));
  }
  std::sort(ss.vertices.begin(), ss.vertices.end());
  ss.affine_dim = affine_dimension(ss.vertices);
  return ss;
}

inline StateSpace state_space(const Algebra& alg) {
  return state_space_with(alg.table(), {});
}

// Additivity and bounds, checked directly against the table.
struct StateCheck {
  bool ok = true;
  std::string reason;
};

inline StateCheck is_state(const Algebra& alg, const RatVec& s) {
  const Table& t = alg.table();
  StateCheck r;
  if (int(s.size()) != t.size()) {
    r.ok = false;
    r.reason = "wrong length";
    return r;
  }
  if (s[size_t(t.zero())] != 0 || s[size_t(t.one())] != 1) {
    r.ok = false;
    r.reason = "boundary values";
    return r;
  }
  for (Elem e = 0; e < t.size(); ++e)
    if (s[size_t(e)] < 0 || s[size_t(e)] > 1) {
      r.ok = false;
      r.reason = "value outside [0,1] at " + t.name(e);
      return r;
    }
  bool bad = false;
  Elem ba = -1, bb = -1;
  t.for_each_entry([&](Elem a, Elem b, Elem c) {
    if (!bad && s[size_t(a)] + s[size_t(b)] != s[size_t(c)]) {
      bad = true;
      ba = a;
      bb = b;
    }
  });
  if (bad) {
    r.ok = false;
    r.reason = "not additive on (" + t.name(ba) + "," + t.name(bb) + ")";
  }
  return r;
}

// A state is extremal iff, in parameter space, its tight rows have full rank.
inline bool is_extremal(const StateSpace& ss, const RatVec& s) {
  int d = int(ss.param.free_vars.size());
  RatVec t_pt(static_cast<size_t>(d));
  for (int p = 0; p < d; ++p) t_pt[size_t(p)] = s[size_t(ss.param.free_vars[size_t(p)])];
  std::vector<RatVec> tight;
  for (const IneqRow& r : ss.rows) {
    Rat sl = r.b;
    for (int j = 0; j < d; ++j) sl += r.a[size_t(j)] * t_pt[size_t(j)];
    if (sl == 0) tight.push_back(r.a);
  }
  if (d == 0) return true;
  if (tight.empty()) return false;
  return rank_rows(std::move(tight)) == d;
}

// max { s(z) : z <= x, z <= y } against min(s(x), s(y)), for every pair.
struct PairCheck {
  bool holds = true;
  Elem x = -1, y = -1;
};

inline PairCheck criterion32(const Algebra& alg, const RatVec& s) {
  PairCheck r;
  for (Elem x = 0; x < alg.size() && r.holds; ++x)
    for (Elem y = x; y < alg.size() && r.holds; ++y) {
      Bits lows = alg.below(x) & alg.below(y);
      Rat best(0);
      lows.for_each([&](int z) { best = std::max(best, s[size_t(z)]); });
      Rat want = std::min(s[size_t(x)], s[size_t(y)]);
      if (best != want) {
        r.holds = false;
        r.x = x;
        r.y = y;
      }
    }
  return r;
}

// Whenever s(x)=s(y)=1 some common lower bound also carries value 1.
inline PairCheck is_jauch_piron(const Algebra& alg, const RatVec& s) {
  PairCheck r;
  for (Elem x = 0; x < alg.size() && r.holds; ++x)
    for (Elem y = x; y < alg.size() && r.holds; ++y) {
      if (s[size_t(x)] != 1 || s[size_t(y)] != 1) continue;
      Bits lows = alg.below(x) & alg.below(y);
      bool found = false;
      lows.for_each([&](int z) { found |= s[size_t(z)] == 1; });
      if (!found) {
        r.holds = false;
        r.x = x;
        r.y = y;
      }
    }
  return r;
}

inline RatVec sigma_convex(const std::vector<RatVec>& states, const RatVec& weights) {
  if (states.size() != weights.size() || states.empty())
    throw std::invalid_argument("sigma_convex needs matching nonempty lists");
  Rat total(0);
  for (const Rat& w : weights) {
    if (w < 0) throw std::invalid_argument("sigma_convex needs nonnegative weights");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("sigma_convex weights must sum to 1");
  RatVec out(states[0].size(), Rat(0));
  for (size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != out.size())
      throw std::invalid_argument("sigma_convex states must have equal length");
    for (size_t j = 0; j < out.size(); ++j) out[j] += weights[i] * states[i][j];
  }
  return out;
}

// Properties of a finite family of states.
struct FamilyReport {
  bool order_determining = true;
  Elem od_x = -1, od_y = -1;  // all states say <=, the algebra disagrees
  bool separating = true;
  Elem sep_x = -1, sep_y = -1;
};

inline FamilyReport state_family_properties(const Algebra& alg,
                                            const std::vector<RatVec>& states) {
  FamilyReport r;
  for (Elem x = 0; x < alg.size(); ++x)
    for (Elem y = 0; y < alg.size(); ++y) {
      if (x == y) continue;
      bool all_leq = true, all_eq = true;
      for (const RatVec& s : states) {
        all_leq &= s[size_t(x)] <= s[size_t(y)];
        all_eq &= s[size_t(x)] == s[size_t(y)];
      }
      if (all_leq && !alg.leq(x, y) && r.order_determining) {
        r.order_determining = false;
        r.od_x = x;
        r.od_y = y;
      }
      if (all_eq && r.separating) {
        r.separating = false;
        r.sep_x = x;
        r.sep_y = y;
      }
    }
  return r;
}

// Deterministic mixture stream used by the suite and the acceptance run.
class MixtureSampler {
public:
  explicit MixtureSampler(uint64_t seed) : s_(seed) {}

  RatVec weights(size_t k) {
    RatVec w(k);
    Rat total(0);
    for (size_t i = 0; i < k; ++i) {
      w[i] = Rat(int(next() % 101));
      total += w[i];
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    for (Rat& x : w) x /= total;
    return w;
  }

private:
  uint64_t next() {
    uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  uint64_t s_;
};

}  // namespace ea
