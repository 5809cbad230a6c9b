#pragma once

// Exact polytope machinery for state spaces.
//
// The equality system (one variable per element) is eliminated into an affine
// parameterization over free variables, each of which is an actual element
// value and therefore lives in [0,1]. Vertices are then enumerated by the
// double description method: start from the parameter box, cut one inequality
// at a time, and keep tight-row sets so edge adjacency stays combinatorial.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ea/bits.hpp"
#include "ea/linalg.hpp"
#include "ea/rational.hpp"

namespace ea {

struct AffineExpr {
  std::map<int, Rat> coef;  // keyed by free-variable position after eliminate()
  Rat cst;
};

struct SparseEq {
  std::map<int, Rat> coef;  // keyed by variable index
  Rat cst;                  // sum coef*x = cst
};

struct Parameterization {
  bool feasible = true;
  int nvars = 0;
  std::vector<int> free_vars;     // parameter position -> variable index
  std::vector<AffineExpr> exprs;  // per variable, over parameter positions
};

// Gaussian elimination tuned for long sparse systems: each equation is
// reduced against the expressions found so far; the pivot is the
// highest-index unresolved variable, which for sum rows c = a + b tends to be
// the sum result, keeping expressions short.
inline Parameterization eliminate(int nvars, const std::vector<SparseEq>& eqs) {
  struct Resolved {
    std::map<int, Rat> coef;  // over unresolved variable indices
    Rat cst;
  };
  std::vector<std::optional<Resolved>> res(static_cast<size_t>(nvars));
  std::vector<std::vector<int>> mentions(static_cast<size_t>(nvars));  // var -> resolved vars using it

  for (const SparseEq& eq : eqs) {
    std::map<int, Rat> row;
    Rat cst = eq.cst;
    for (const auto& [v, c] : eq.coef) {
      if (res[size_t(v)]) {
        for (const auto& [w, cw] : res[size_t(v)]->coef) {
          Rat& slot = row[w];
          slot += c * cw;
          if (slot == 0) row.erase(w);
        }
        cst -= c * res[size_t(v)]->cst;
      } else {
        Rat& slot = row[v];
        slot += c;
        if (slot == 0) row.erase(v);
      }
    }
    if (row.empty()) {
      if (cst != 0) {
        Parameterization p;
        p.feasible = false;
        p.nvars = nvars;
        return p;
      }
      continue;
    }
    int pivot = row.rbegin()->first;
    Rat pc = row[pivot];
    Resolved r;
    r.cst = cst / pc;
    for (const auto& [v, c] : row)
      if (v != pivot) r.coef[v] = -c / pc;

    for (int user : mentions[size_t(pivot)]) {
      auto& ru = *res[size_t(user)];
      auto it = ru.coef.find(pivot);
      if (it == ru.coef.end()) continue;
      Rat f = it->second;
      ru.coef.erase(it);
      ru.cst += f * r.cst;
      for (const auto& [v, c] : r.coef) {
        Rat& slot = ru.coef[v];
        slot += f * c;
        if (slot == 0) ru.coef.erase(v);
        else if (std::find(mentions[size_t(v)].begin(), mentions[size_t(v)].end(), user) ==
                 mentions[size_t(v)].end())
          mentions[size_t(v)].push_back(user);
      }
    }
    mentions[size_t(pivot)].clear();
    for (const auto& [v, c] : r.coef) mentions[size_t(v)].push_back(pivot);
    res[size_t(pivot)] = std::move(r);
  }

  Parameterization p;
  p.nvars = nvars;
  std::vector<int> pos(static_cast<size_t>(nvars), -1);
  for (int v = 0; v < nvars; ++v)
    if (!res[size_t(v)]) {
      pos[size_t(v)] = int(p.free_vars.size());
      p.free_vars.push_back(v);
    }
  p.exprs.resize(static_cast<size_t>(nvars));
  for (int v = 0; v < nvars; ++v) {
    AffineExpr e;
    if (res[size_t(v)]) {
      e.cst = res[size_t(v)]->cst;
      for (const auto& [w, c] : res[size_t(v)]->coef) e.coef[pos[size_t(w)]] = c;
    } else {
      e.coef[pos[size_t(v)]] = 1;
    }
    p.exprs[size_t(v)] = std::move(e);
  }
  return p;
}

// One halfspace a.t + b >= 0 over the parameter space.
struct IneqRow {
  RatVec a;
  Rat b;
};

namespace detail {
// Primitive integer form, orientation preserved; equal rows are equal halfspaces.
inline void normalize_row(IneqRow& r) {
  Int l = 1;
  for (const Rat& x : r.a) l = lcm(l, denominator(x));
  l = lcm(l, denominator(r.b));
  Int g = 0;
  auto acc = [&](const Rat& x) {
    Int v = numerator(x) * (l / denominator(x));
    g = gcd(g, abs(v));
    return v;
  };
  std::vector<Int> ints;
  for (Rat& x : r.a) ints.push_back(acc(x));
  Int bi = acc(r.b);
  if (g == 0) g = 1;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = Rat(ints[i] / g);
  r.b = Rat(bi / g);
}
}  // namespace detail

// Vertices of {t in [0,1]^d : every row satisfied}. The caller guarantees the
// polytope sits inside the unit box (true for state systems, whose free
// parameters are element values).
inline std::vector<RatVec> dd_vertices(int d, std::vector<IneqRow> rows) {
  if (d > 16) throw std::invalid_argument("parameter dimension too large");

  // Constant rows decide feasibility outright.
  std::vector<IneqRow> work;
  for (IneqRow& r : rows) {
    bool all0 = std::all_of(r.a.begin(), r.a.end(), [](const Rat& x) { return x == 0; });
    if (all0) {
      if (r.b < 0) return {};
      continue;
    }
    detail::normalize_row(r);
    work.push_back(std::move(r));
  }

  // Row list: 2d box rows first, then the distinct remaining rows.
  std::vector<IneqRow> all;
  for (int j = 0; j < d; ++j) {
    IneqRow lo{RatVec(size_t(d), Rat(0)), Rat(0)};
    lo.a[size_t(j)] = 1;
    IneqRow hi{RatVec(size_t(d), Rat(0)), Rat(1)};
    hi.a[size_t(j)] = -1;
    all.push_back(std::move(lo));
    all.push_back(std::move(hi));
  }
  auto row_eq = [](const IneqRow& x, const IneqRow& y) {
    return x.b == y.b && x.a == y.a;
  };
  for (IneqRow& r : work) {
    bool dup = false;
    for (const IneqRow& s : all)
      if (row_eq(r, s)) {
        dup = true;
        break;
      }
    if (!dup) all.push_back(std::move(r));
  }
  int m = int(all.size());

  auto slack = [&](const IneqRow& r, const RatVec& t) {
    Rat s = r.b;
    for (int j = 0; j < d; ++j) s += r.a[size_t(j)] * t[size_t(j)];
    return s;
  };

  struct Vertex {
    RatVec t;
    Bits tight;  // over row indices, processed rows only
  };
  std::vector<Vertex> vs;
  for (unsigned corner = 0; corner < (1u << d); ++corner) {
    Vertex v;
    v.t.assign(size_t(d), Rat(0));
    v.tight = Bits(m);
    for (int j = 0; j < d; ++j) {
      if ((corner >> j) & 1) {
        v.t[size_t(j)] = 1;
        v.tight.set(2 * j + 1);
      } else {
        v.tight.set(2 * j);
      }
    }
    vs.push_back(std::move(v));
  }

  int processed = 2 * d;
  for (int k = processed; k < m; ++k) {
    std::vector<Rat> slacks(vs.size());
    std::vector<int> sign(vs.size());
    bool any_neg = false;
    for (size_t i = 0; i < vs.size(); ++i) {
      slacks[i] = slack(all[size_t(k)], vs[i].t);
      sign[i] = slacks[i] > 0 ? 1 : slacks[i] < 0 ? -1 : 0;
      any_neg |= sign[i] < 0;
    }
    if (!any_neg) {
      for (size_t i = 0; i < vs.size(); ++i)
        if (sign[i] == 0) vs[i].tight.set(k);
      continue;
    }

    std::vector<Vertex> next;
    for (size_t i = 0; i < vs.size(); ++i)
      if (sign[i] >= 0) {
        if (sign[i] == 0) vs[i].tight.set(k);
        next.push_back(vs[i]);
      }

    for (size_t iu = 0; iu < vs.size(); ++iu) {
      if (sign[iu] <= 0) continue;
      for (size_t iw = 0; iw < vs.size(); ++iw) {
        if (sign[iw] >= 0) continue;
        Bits common = vs[iu].tight & vs[iw].tight;
        bool edge = true;
        for (size_t iv = 0; iv < vs.size() && edge; ++iv)
          if (iv != iu && iv != iw && common.subset_of(vs[iv].tight)) edge = false;
        if (!edge) continue;
        Rat lam = slacks[iu] / (slacks[iu] - slacks[iw]);
        Vertex nv;
        nv.t.resize(size_t(d));
        for (int j = 0; j < d; ++j)
          nv.t[size_t(j)] =
              vs[iu].t[size_t(j)] + lam * (vs[iw].t[size_t(j)] - vs[iu].t[size_t(j)]);
        nv.tight = Bits(m);
        for (int r = 0; r <= k; ++r)
          if (slack(all[size_t(r)], nv.t) == 0) nv.tight.set(r);
        next.push_back(std::move(nv));
      }
    }
    vs = std::move(next);
    if (vs.empty()) return {};
  }

  std::vector<RatVec> out;
  for (auto& v : vs) out.push_back(std::move(v.t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Affine dimension of a finite point set: rank of the difference matrix.
inline int affine_dimension(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return rank_rows(std::move(diffs));
}

}  // namespace ea
