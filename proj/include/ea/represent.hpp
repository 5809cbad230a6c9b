#pragma once

// Convex representation of states: barycentric decomposition over extremal
// states, simplex classification, the restriction map onto the center, and the
// six-way equivalence classification for algebras with the refinement
// property.  Also hosts two exactly-representable infinite families (strict
// pairs and affine functions on the unit interval) that live at the level of
// rational pairs rather than finite tables.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ea/states.hpp"
#include "ea/structure.hpp"

namespace ea {

// Finitely supported convex weights over the vertex list of a state space.
// Invariants: support indices are distinct and ascending, weights are positive
// and sum to 1.
struct DiscreteMeasure {
  std::vector<int> support;
  RatVec weights;
};

inline RatVec measure_combination(const StateSpace& ss, const DiscreteMeasure& m) {
  std::vector<RatVec> pts;
  for (int i : m.support) pts.push_back(ss.vertices[size_t(i)]);
  return sigma_convex(pts, m.weights);
}

// Exact convex decomposition of a state over the extremal states.  The weight
// system is solved in parameter coordinates (plus normalization), so the
// number of equations stays small; the result always reconstructs the input
// exactly.  On simplex state spaces the weights are the unique barycentric
// coordinates, so the pivot order cannot matter there.
inline DiscreteMeasure decompose(const Algebra& alg, const StateSpace& ss,
                                 const RatVec& s, PivotOrder order = PivotOrder::Forward) {
  if (ss.vertices.empty()) throw std::invalid_argument("state space has no extremal states");
  StateCheck chk = is_state(alg, s);
  if (!chk.ok) throw std::invalid_argument("not a state: " + chk.reason);

  const auto& fv = ss.param.free_vars;
  size_t k = ss.vertices.size();
  std::vector<RatVec> lhs;
  RatVec rhs;
  for (int var : fv) {
    RatVec row(k);
    for (size_t i = 0; i < k; ++i) row[i] = ss.vertices[i][size_t(var)];
    lhs.push_back(std::move(row));
    rhs.push_back(s[size_t(var)]);
  }
  lhs.push_back(RatVec(k, Rat(1)));
  rhs.push_back(Rat(1));

  std::optional<RatVec> lambda = feasible_point(lhs, rhs, order);
  if (!lambda) throw std::runtime_error("state not in convex hull of extremal states");

  DiscreteMeasure m;
  for (size_t i = 0; i < k; ++i)
    if ((*lambda)[i] != 0) {
      m.support.push_back(int(i));
      m.weights.push_back((*lambda)[i]);
    }
  if (measure_combination(ss, m) != s)
    throw std::runtime_error("decomposition failed to reconstruct the state");
  return m;
}

enum class SimplexClass { Empty, Simplex, NotSimplex };

// A nonempty polytope is a simplex exactly when its vertex count exceeds its
// affine dimension by one; then every point has a unique decomposition.
inline SimplexClass classify_simplex(const StateSpace& ss) {
  if (ss.vertices.empty()) return SimplexClass::Empty;
  if (int(ss.vertices.size()) == ss.affine_dim + 1) return SimplexClass::Simplex;
  return SimplexClass::NotSimplex;
}

// Restriction of extremal states to the center.  Each vertex of the full
// state space restricts to a state on the center's Boolean algebra; the map
// is measured for extremality of the images, injectivity, and surjectivity
// onto the center's own extremal states.
struct ThetaReport {
  std::vector<Elem> centrals;
  Table center_tab;
  StateSpace center_space;
  std::vector<RatVec> restricted;          // per full-space vertex
  std::vector<bool> restriction_extremal;  // image extremal on the center
  bool all_extremal = true;
  bool injective = true;
  bool surjective = true;
  bool bijective() const { return all_extremal && injective && surjective; }
};

inline ThetaReport theta_map(const Algebra& alg, const StateSpace& ss) {
  ThetaReport r;
  CenterReport cr = center(alg);
  r.centrals = cr.elements;
  r.center_tab = center_table(alg, cr.elements);
  Algebra ctr(r.center_tab);
  r.center_space = state_space(ctr);

  for (const RatVec& v : ss.vertices) {
    RatVec img(r.centrals.size());
    for (size_t i = 0; i < r.centrals.size(); ++i) img[i] = v[size_t(r.centrals[i])];
    bool ext = is_state(ctr, img).ok && is_extremal(r.center_space, img);
    if (!ext) r.all_extremal = false;
    r.restriction_extremal.push_back(ext);
    r.restricted.push_back(std::move(img));
  }
  for (size_t i = 0; i < r.restricted.size() && r.injective; ++i)
    for (size_t j = i + 1; j < r.restricted.size(); ++j)
      if (r.restricted[i] == r.restricted[j]) {
        r.injective = false;
        break;
      }
  for (const RatVec& cv : r.center_space.vertices) {
    bool hit = false;
    for (const RatVec& img : r.restricted)
      if (img == cv) {
        hit = true;
        break;
      }
    if (!hit) {
      r.surjective = false;
      break;
    }
  }
  return r;
}

// The six equivalent conditions for algebras with the refinement property:
//  (i)   every extremal state on the center extends to a unique state, and
//        that extension is extremal;
//  (ii)  the state space is a simplex;
//  (iii) the order is a lattice;
//  (iv)  general comparability holds;
//  (v)   restriction to the center is a bijection on extremal states;
//  (vi)  the total sum extends the partial one (the mv construction works).
// Without the refinement property the equivalence is not asserted and the
// report only records that the precondition failed.
struct Theorem51Report {
  bool precondition_rdp = false;
  RefinementReport rdp;
  bool unique_extension = false;
  bool simplex = false;
  bool lattice = false;
  bool gencomp = false;
  bool theta_bijective = false;
  bool mv_ok = false;
  bool agree = false;
  SimplexClass simplex_class = SimplexClass::Empty;
  ThetaReport theta;
  bool all_hold() const {
    return unique_extension && simplex && lattice && gencomp && theta_bijective && mv_ok;
  }
};

// Condition (i), checked by exact polytope slicing: fixing the state values
// on every central element cuts out a face of the full state space; the
// extension is unique exactly when that face is a single point.
inline bool unique_extremal_extension(const Algebra& alg, const StateSpace& ss,
                                      const ThetaReport& theta) {
  for (const RatVec& cv : theta.center_space.vertices) {
    std::vector<SparseEq> fixed;
    for (size_t i = 0; i < theta.centrals.size(); ++i) {
      SparseEq eq;
      eq.coef[theta.centrals[i]] = 1;
      eq.cst = cv[i];
      fixed.push_back(std::move(eq));
    }
    StateSpace sliced = state_space_with(alg.table(), fixed);
    if (sliced.vertices.size() != 1) return false;
    if (!is_extremal(ss, sliced.vertices[0])) return false;
  }
  return true;
}

inline Theorem51Report theorem51_report(const Algebra& alg) {
  Theorem51Report r;
  r.rdp = check_rdp(alg);
  r.precondition_rdp = r.rdp.holds;
  if (!r.precondition_rdp) return r;

  StateSpace ss = state_space(alg);
  r.simplex_class = classify_simplex(ss);
  r.simplex = r.simplex_class == SimplexClass::Simplex;
  r.lattice = check_lattice(alg).holds;
  r.gencomp = check_general_comparability(alg).holds;
  r.mv_ok = mv_construct(alg).ok;
  r.theta = theta_map(alg, ss);
  r.theta_bijective = r.theta.bijective();
  r.unique_extension = unique_extremal_extension(alg, ss, r.theta);

  bool first = r.unique_extension;
  r.agree = r.simplex == first && r.lattice == first && r.gencomp == first &&
            r.theta_bijective == first && r.mv_ok == first;
  return r;
}

// ---------------------------------------------------------------------------
// Strict pairs: the unit interval of Q x Q under the strict product order,
// where (a,b) < (c,d) needs both components strictly below.  Elements are
// (0,0), (1,1), and the pairs with both components strictly inside (0,1).
// The two coordinate projections are states, and they separate points without
// determining the order.

struct RationalPair {
  Rat first, second;
  bool operator==(const RationalPair&) const = default;
};

inline bool sp_leq(const RationalPair& a, const RationalPair& b) {
  return a == b || (a.first < b.first && a.second < b.second);
}

inline bool sp_member(const RationalPair& p) {
  return sp_leq(RationalPair{0, 0}, p) && sp_leq(p, RationalPair{1, 1});
}

// Partial sum: componentwise addition, defined only when the result is again
// between (0,0) and (1,1) in the strict order.
inline std::optional<RationalPair> sp_sum(const RationalPair& a, const RationalPair& b) {
  RationalPair total{a.first + b.first, a.second + b.second};
  if (!sp_member(total)) return std::nullopt;
  return total;
}

// The two projection states: index 1 takes the first component, index 0 the
// second.
inline Rat sp_state(int which, const RationalPair& a) {
  if (which != 0 && which != 1) throw std::invalid_argument("strict-pair state index must be 0 or 1");
  return which == 1 ? a.first : a.second;
}

// Summability seen through states versus summability in the algebra: both
// projections may allow a sum (s(a) <= 1 - s(b)) that the strict order
// rejects.  Witnesses that the family of pair algebras is not closed under
// the test that characterizes clans of functions.
struct SpClanReport {
  bool hat_leq = false;      // s(a) <= 1 - s(b) for both projection states
  RationalPair total;       // componentwise sum
  bool member = false;       // whether the sum lands back in the algebra
};

inline SpClanReport sp_clan_witness(const RationalPair& a, const RationalPair& b) {
  SpClanReport r;
  r.hat_leq = a.first + b.first <= 1 && a.second + b.second <= 1;
  r.total = RationalPair{a.first + b.first, a.second + b.second};
  r.member = sp_member(r.total);
  return r;
}

// ---------------------------------------------------------------------------
// Affine functions [0,1] -> [0,1] with rational coefficients, encoded by
// endpoint values (f(0), f(1)) and ordered pointwise; on affine functions the
// pointwise order is decided at the endpoints.  Every x in [0,1] induces the
// evaluation state f |-> f(x), and each of these is a convex combination of
// the two endpoint evaluations.

inline bool aff_leq(const RationalPair& f, const RationalPair& g) {
  return f.first <= g.first && f.second <= g.second;
}

inline bool aff_member(const RationalPair& f) {
  return f.first >= 0 && f.first <= 1 && f.second >= 0 && f.second <= 1;
}

inline Rat aff_state(const Rat& x, const RationalPair& f) {
  if (x < 0 || x > 1) throw std::invalid_argument("evaluation point outside [0,1]");
  return (Rat(1) - x) * f.first + x * f.second;
}

// Lattice meet: the endpointwise minimum is affine, lies below both, and
// dominates every affine lower bound, so it is the meet even when the
// pointwise minimum is not affine.
inline RationalPair aff_meet(const RationalPair& f, const RationalPair& g) {
  return {f.first < g.first ? f.first : g.first, f.second < g.second ? f.second : g.second};
}

// Whether the pointwise minimum of two affine functions is itself affine.
// It fails to be exactly when the graphs cross strictly inside (0,1); the
// crossing point is reported in that case.
struct AffMinReport {
  bool affine = true;
  std::optional<Rat> crossing;
};

inline AffMinReport aff_min_membership(const RationalPair& f, const RationalPair& g) {
  AffMinReport r;
  Rat d0 = f.first - g.first;
  Rat d1 = f.second - g.second;
  if ((d0 > 0 && d1 < 0) || (d0 < 0 && d1 > 0)) {
    r.affine = false;
    r.crossing = d0 / (d0 - d1);
  }
  return r;
}

// Barycentric decomposition of the evaluation state at x over the endpoint
// evaluations: weight 1-x on evaluation at 0 (index 0), weight x on
// evaluation at 1 (index 1).
inline DiscreteMeasure aff_decompose(const Rat& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("evaluation point outside [0,1]");
  DiscreteMeasure m;
  if (x != 1) {
    m.support.push_back(0);
    m.weights.push_back(Rat(1) - x);
  }
  if (x != 0) {
    m.support.push_back(1);
    m.weights.push_back(x);
  }
  return m;
}

}  // namespace ea
