#pragma once

// Structural classifiers over a verified table: refinement (RDP),
// interpolation, lattice order, the MV construction, central elements and the
// center, general comparability, and bounded divisibility.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ea/core.hpp"
#include "ea/corpus.hpp"

namespace ea {

struct RefinementReport {
  bool holds = true;
  std::array<Elem, 4> witness{-1, -1, -1, -1};  // x1, x2, y1, y2
};

// Every identity x1 + x2 = y1 + y2 must refine into a 2x2 grid of summands.
// Given c11, the rest of the grid is forced, so scanning c11 is exhaustive.
inline RefinementReport check_rdp(const Algebra& alg) {
  const Table& t = alg.table();
  std::vector<std::vector<std::pair<Elem, Elem>>> pairs(size_t(t.size()));
  for (Elem a = 0; a < t.size(); ++a)
    for (Elem b = 0; b < t.size(); ++b) {
      Elem v = t.sum(a, b);
      if (v >= 0) pairs[size_t(v)].push_back({a, b});
    }

  RefinementReport r;
  for (Elem v = 0; v < t.size() && r.holds; ++v) {
    const auto& ps = pairs[size_t(v)];
    for (size_t i = 0; i < ps.size() && r.holds; ++i)
      for (size_t j = i + 1; j < ps.size() && r.holds; ++j) {
        auto [x1, x2] = ps[i];
        auto [y1, y2] = ps[j];
        bool refined = false;
        Bits c11s = alg.below(x1) & alg.below(y1);
        c11s.for_each([&](int c11) {
          if (refined) return;
          Elem c12 = alg.difference(c11, x1);
          Elem c21 = alg.difference(c11, y1);
          if (!alg.leq(c21, x2)) return;
          Elem c22 = alg.difference(c21, x2);
          refined = t.sum(c12, c22) == y2;
        });
        if (!refined) {
          r.holds = false;
          r.witness = {x1, x2, y1, y2};
        }
      }
  }
  return r;
}

// Whenever x1, x2 <= y1, y2 some z must fit strictly between the pairs.
inline RefinementReport check_interpolation(const Algebra& alg) {
  RefinementReport r;
  int n = alg.size();
  for (Elem x1 = 0; x1 < n && r.holds; ++x1)
    for (Elem x2 = x1; x2 < n && r.holds; ++x2) {
      Bits up = alg.above(x1) & alg.above(x2);
      for (Elem y1 = 0; y1 < n && r.holds; ++y1) {
        if (!alg.leq(x1, y1) || !alg.leq(x2, y1)) continue;
        for (Elem y2 = y1; y2 < n && r.holds; ++y2) {
          if (!alg.leq(x1, y2) || !alg.leq(x2, y2)) continue;
          Bits mid = up & alg.below(y1) & alg.below(y2);
          if (!mid.any()) {
            r.holds = false;
            r.witness = {x1, x2, y1, y2};
          }
        }
      }
    }
  return r;
}

struct LatticeReport {
  bool holds = true;
  Elem x = -1, y = -1;
  const char* missing = nullptr;  // "meet" or "join"
};

inline LatticeReport check_lattice(const Algebra& alg) {
  LatticeReport r;
  for (Elem x = 0; x < alg.size() && r.holds; ++x)
    for (Elem y = x + 1; y < alg.size() && r.holds; ++y) {
      if (!alg.meet(x, y)) {
        r = {false, x, y, "meet"};
      } else if (!alg.join(x, y)) {
        r = {false, x, y, "join"};
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Interval algebras and centrality.

// The order interval [0,e] with the inherited partial sum and unit e.
inline Table interval_table(const Algebra& alg, Elem e) {
  const Table& t = alg.table();
  std::vector<Elem> members;
  alg.below(e).for_each([&](int x) { members.push_back(x); });
  std::vector<std::string> names;
  for (Elem x : members) names.push_back(t.name(x));
  std::vector<int> pos(size_t(t.size()), -1);
  for (int i = 0; i < int(members.size()); ++i) pos[size_t(members[size_t(i)])] = i;
  Table out = Table::with_elements(names, pos[size_t(alg.zero())], pos[size_t(e)],
                                   t.label + "[0," + t.name(e) + "]");
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i; j < members.size(); ++j) {
      Elem s = t.sum(members[i], members[j]);
      if (s >= 0 && alg.leq(s, e)) out.add_sum(int(i), int(j), pos[size_t(s)]);
    }
  return out;
}

struct CentralityWitness {
  Elem element = -1;
  bool central = false;
  bool iso_verified = false;
  std::vector<std::pair<Elem, Elem>> parts;  // x -> (x1, x2), when central
  std::string reason;
};

// Central means: every x splits uniquely below (e, e'), and the split map is
// an isomorphism onto the product of the two interval algebras.
inline CentralityWitness is_central(const Algebra& alg, Elem e) {
  CentralityWitness w;
  w.element = e;
  if (e == alg.zero() || e == alg.one()) {
    w.central = w.iso_verified = true;
    for (Elem x = 0; x < alg.size(); ++x)
      w.parts.push_back(e == alg.one() ? std::pair<Elem, Elem>{x, alg.zero()}
                                       : std::pair<Elem, Elem>{alg.zero(), x});
    return w;
  }

  Elem ec = alg.orthosupplement(e);
  const Table& t = alg.table();
  for (Elem x = 0; x < alg.size(); ++x) {
    std::optional<std::pair<Elem, Elem>> found;
    bool unique = true;
    alg.below(e).for_each([&](int x1) {
      Bits cands = alg.below(ec);
      cands.for_each([&](int x2) {
        if (t.sum(x1, x2) != x) return;
        if (found) unique = false;
        if (!found) found = {x1, x2};
      });
    });
    if (!found || !unique) {
      w.reason = (found ? "ambiguous" : "no") + std::string(" decomposition of ") + t.name(x);
      return w;
    }
    w.parts.push_back(*found);
  }

  Table left = interval_table(alg, e);
  Table right = interval_table(alg, ec);
  Table prod = product_table(left, right);
  if (prod.size() != alg.size()) {
    w.reason = "interval sizes do not multiply out";
    return w;
  }
  std::vector<int> lpos(size_t(t.size()), -1), rpos(size_t(t.size()), -1);
  {
    int i = 0;
    alg.below(e).for_each([&](int x) { lpos[size_t(x)] = i++; });
    i = 0;
    alg.below(ec).for_each([&](int x) { rpos[size_t(x)] = i++; });
  }
  std::vector<Elem> phi(size_t(alg.size())), inv(size_t(alg.size()), -1);
  for (Elem x = 0; x < alg.size(); ++x) {
    auto [x1, x2] = w.parts[size_t(x)];
    phi[size_t(x)] = lpos[size_t(x1)] * right.size() + rpos[size_t(x2)];
    if (inv[size_t(phi[size_t(x)])] >= 0) {
      w.reason = "split map not injective";
      return w;
    }
    inv[size_t(phi[size_t(x)])] = x;
  }
  Algebra product_alg(prod, Algebra::Trusted{});
  HomReport fwd = is_homomorphism(alg, product_alg, phi);
  HomReport bwd = is_homomorphism(product_alg, alg, inv);
  if (!fwd.ok || !bwd.ok) {
    w.reason = std::string("split map not an isomorphism: ") +
               (fwd.ok ? bwd.reason : fwd.reason);
    return w;
  }
  w.central = w.iso_verified = true;
  return w;
}

struct CenterReport {
  std::vector<Elem> elements;
  bool boolean_verified = false;
  std::string detail;
};

// All central elements, plus a direct check of the Boolean-algebra laws on
// them: closure under ', meets and joins staying central, complementation,
// and distributivity.
inline CenterReport center(const Algebra& alg) {
  CenterReport r;
  std::vector<bool> in(size_t(alg.size()), false);
  for (Elem e = 0; e < alg.size(); ++e)
    if (is_central(alg, e).central) {
      r.elements.push_back(e);
      in[size_t(e)] = true;
    }

  auto fail = [&](std::string why) {
    r.detail = std::move(why);
    return r;
  };
  const Table& t = alg.table();
  std::vector<std::vector<Elem>> meets(r.elements.size(),
                                       std::vector<Elem>(r.elements.size())),
      joins = meets;
  for (size_t i = 0; i < r.elements.size(); ++i) {
    Elem e = r.elements[i];
    if (!in[size_t(alg.orthosupplement(e))])
      return fail("center not closed under orthosupplement at " + t.name(e));
    for (size_t j = 0; j < r.elements.size(); ++j) {
      Elem f = r.elements[j];
      auto m = alg.meet(e, f), v = alg.join(e, f);
      if (!m || !in[size_t(*m)]) return fail("central meet missing for " + t.name(e));
      if (!v || !in[size_t(*v)]) return fail("central join missing for " + t.name(e));
      meets[i][j] = *m;
      joins[i][j] = *v;
    }
  }
  auto at = [&](Elem e) {
    return size_t(std::find(r.elements.begin(), r.elements.end(), e) - r.elements.begin());
  };
  for (size_t i = 0; i < r.elements.size(); ++i) {
    Elem e = r.elements[i];
    size_t ic = at(alg.orthosupplement(e));
    if (meets[i][ic] != alg.zero() || joins[i][ic] != alg.one())
      return fail("complementation fails at " + t.name(e));
    for (size_t j = 0; j < r.elements.size(); ++j)
      for (size_t k = 0; k < r.elements.size(); ++k) {
        Elem lhs = meets[i][at(joins[j][k])];
        Elem rhs = joins[at(meets[i][j])][at(meets[i][k])];
        if (lhs != rhs) return fail("distributivity fails at " + t.name(e));
      }
  }
  r.boolean_verified = true;
  return r;
}

struct CriterionReport {
  bool precondition_ok = false;
  bool holds = false;
  Elem witness = -1;
};

// Under RDP, centrality collapses to e ^ e' = 0; confirm the equivalence
// element by element. Meaningless without RDP, so that case is flagged.
inline CriterionReport check_rdp_central_criterion(const Algebra& alg) {
  CriterionReport r;
  if (!check_rdp(alg).holds) return r;
  r.precondition_ok = true;
  r.holds = true;
  for (Elem e = 0; e < alg.size(); ++e) {
    auto m = alg.meet(e, alg.orthosupplement(e));
    bool shortcut = m && *m == alg.zero();
    if (shortcut != is_central(alg, e).central) {
      r.holds = false;
      r.witness = e;
      return r;
    }
  }
  return r;
}

struct ComparabilityReport {
  bool holds = true;
  Elem x = -1, y = -1;
};

// Some central e must make x and y comparable coordinatewise: x^e <= y^e
// while x^e' >= y^e'.
inline ComparabilityReport check_general_comparability(const Algebra& alg) {
  ComparabilityReport r;
  std::vector<Elem> centrals = center(alg).elements;
  for (Elem x = 0; x < alg.size() && r.holds; ++x)
    for (Elem y = 0; y < alg.size() && r.holds; ++y) {
      bool ok = false;
      for (Elem e : centrals) {
        Elem ec = alg.orthosupplement(e);
        auto xe = alg.meet(x, e), ye = alg.meet(y, e);
        auto xc = alg.meet(x, ec), yc = alg.meet(y, ec);
        if (!xe || !ye || !xc || !yc) continue;
        if (alg.leq(*xe, *ye) && alg.leq(*yc, *xc)) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        r.holds = false;
        r.x = x;
        r.y = y;
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// MV construction.

struct MvResult {
  bool ok = false;
  std::string reason;
  std::vector<std::vector<Elem>> oplus;  // total when ok
};

// On a lattice, a (+) b := a + (b ^ a') is total. The result is accepted only
// if it verifies as an MV algebra: commutative monoid with involutive ',
// absorbing unit, the Lukasiewicz identity, and agreement with the partial +.
inline MvResult mv_construct(const Algebra& alg) {
  MvResult r;
  if (LatticeReport l = check_lattice(alg); !l.holds) {
    r.reason = std::string("no ") + l.missing + " for (" + alg.table().name(l.x) + "," +
               alg.table().name(l.y) + ")";
    return r;
  }
  int n = alg.size();
  const Table& t = alg.table();
  auto neg = [&](Elem x) { return alg.orthosupplement(x); };
  r.oplus.assign(size_t(n), std::vector<Elem>(size_t(n)));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem m = *alg.meet(b, neg(a));
      r.oplus[size_t(a)][size_t(b)] = t.sum(a, m);
    }
  auto op = [&](Elem a, Elem b) { return r.oplus[size_t(a)][size_t(b)]; };

  auto fail = [&](std::string why) {
    r.oplus.clear();
    r.reason = std::move(why);
    return r;
  };
  for (Elem a = 0; a < n; ++a) {
    if (op(a, alg.zero()) != a) return fail("0 is not neutral at " + t.name(a));
    if (op(a, alg.one()) != alg.one()) return fail("1 does not absorb at " + t.name(a));
    if (neg(neg(a)) != a) return fail("negation not involutive at " + t.name(a));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a))
        return fail("not commutative at (" + t.name(a) + "," + t.name(b) + ")");
      if (op(neg(op(neg(a), b)), b) != op(neg(op(neg(b), a)), a))
        return fail("Lukasiewicz identity fails at (" + t.name(a) + "," + t.name(b) + ")");
      if (Elem s = t.sum(a, b); s >= 0 && op(a, b) != s)
        return fail("disagrees with + at (" + t.name(a) + "," + t.name(b) + ")");
      if (alg.leq(a, neg(b)) && op(a, b) != t.sum(a, b))
        return fail("summable pair diverges at (" + t.name(a) + "," + t.name(b) + ")");
      for (Elem c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          return fail("not associative at (" + t.name(a) + "," + t.name(b) + "," +
                      t.name(c) + ")");
    }
  r.ok = true;
  return r;
}

// ---------------------------------------------------------------------------
// Bounded divisibility.

struct DivisibilityReport {
  int nmax = 0;
  bool divisible = true;  // up to nmax
  Elem fail_x = -1;
  int fail_n = -1;
  // divisor[n-1][x] = y with n*y = x, or -1.
  std::vector<std::vector<Elem>> divisor;
};

inline Elem iterated_sum(const Table& t, Elem y, int n) {
  Elem acc = y;
  for (int i = 1; i < n && acc >= 0; ++i) acc = t.sum(acc, y);
  return acc;
}

inline DivisibilityReport check_divisible(const Algebra& alg, int nmax) {
  DivisibilityReport r;
  r.nmax = nmax;
  const Table& t = alg.table();
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Elem> row(size_t(alg.size()), -1);
    for (Elem y = 0; y < alg.size(); ++y) {
      Elem x = iterated_sum(t, y, n);
      if (x >= 0 && row[size_t(x)] < 0) row[size_t(x)] = y;
    }
    for (Elem x = 0; x < alg.size(); ++x)
      if (row[size_t(x)] < 0 && r.divisible) {
        r.divisible = false;
        r.fail_x = x;
        r.fail_n = n;
      }
    r.divisor.push_back(std::move(row));
  }
  return r;
}

// The center as a table of its own; its sums are the ones E already defines.
inline Table center_table(const Algebra& alg, const std::vector<Elem>& centrals) {
  const Table& t = alg.table();
  std::vector<std::string> names;
  for (Elem e : centrals) names.push_back(t.name(e));
  std::vector<int> pos(size_t(t.size()), -1);
  for (int i = 0; i < int(centrals.size()); ++i) pos[size_t(centrals[size_t(i)])] = i;
  int zi = pos[size_t(alg.zero())], oi = pos[size_t(alg.one())];
  Table out = Table::with_elements(names, zi, oi, t.label + ".center");
  for (size_t i = 0; i < centrals.size(); ++i)
    for (size_t j = i; j < centrals.size(); ++j) {
      Elem s = t.sum(centrals[i], centrals[j]);
      if (s >= 0 && pos[size_t(s)] >= 0) out.add_sum(int(i), int(j), pos[size_t(s)]);
    }
  return out;
}

}  // namespace ea
