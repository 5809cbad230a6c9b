#pragma once

// Families of [0,1]-valued rational functions on a finite point set: clans
// (closed under complement and allowed pointwise sums), Bold families
// (additionally closed under truncated addition), their induced effect
// algebra tables, the set algebra of central characteristic functions, and
// the exact finite integral representation of states.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ea/corpus.hpp"
#include "ea/states.hpp"
#include "ea/structure.hpp"

namespace ea {

// A single function, carrying its universe so cross-family operations can
// check they talk about the same points.
struct FunctionTable {
  std::vector<std::string> points;
  RatVec values;
};

enum class ClosureKind { Raw, Clan, Bold };

// Members are value vectors aligned with the point list.  Closure
// constructors emit them in lexicographic order, which doubles as the element
// order of the induced table; families read from files keep listing order.
struct FunctionFamily {
  std::vector<std::string> points;
  std::vector<RatVec> members;
  ClosureKind kind = ClosureKind::Raw;
};

struct CapExceeded : std::runtime_error {
  int cap;
  explicit CapExceeded(int c)
      : std::runtime_error("closure would exceed the cap of " + std::to_string(c) + " members"),
        cap(c) {}
};

inline void validate_function(const std::vector<std::string>& points, const RatVec& v) {
  if (v.size() != points.size())
    throw std::invalid_argument("function has " + std::to_string(v.size()) + " values for " +
                                std::to_string(points.size()) + " points");
  for (const Rat& x : v)
    if (x < 0 || x > 1) throw std::invalid_argument("function value outside [0,1]");
}

namespace detail {

inline bool pointwise_summable(const RatVec& f, const RatVec& g) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] + g[i] > 1) return false;
  return true;
}

inline RatVec pointwise_sum(const RatVec& f, const RatVec& g) {
  RatVec h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[i] + g[i];
  return h;
}

inline RatVec complement(const RatVec& f) {
  RatVec h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = Rat(1) - f[i];
  return h;
}

inline RatVec truncated_sum(const RatVec& f, const RatVec& g) {
  RatVec h(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Rat s = f[i] + g[i];
    h[i] = s > 1 ? Rat(1) : s;
  }
  return h;
}

}  // namespace detail

// Least family containing the generators, the constants 0 and 1, every
// complement, and every pointwise sum f+g with f <= 1-g; Bold closure also
// adds the truncated sum min(f+g, 1) of every pair.  Grows a frontier until
// no round adds a member; throws CapExceeded rather than truncating.
inline FunctionFamily closure_family(const std::vector<std::string>& points,
                                     const std::vector<RatVec>& generators, int cap,
                                     ClosureKind kind) {
  if (cap < 1) throw std::invalid_argument("closure cap must be positive");
  for (const RatVec& g : generators) validate_function(points, g);

  std::set<RatVec> pool;
  auto admit = [&](RatVec f, std::vector<RatVec>& frontier) {
    auto [it, fresh] = pool.insert(std::move(f));
    if (!fresh) return;
    if (int(pool.size()) > cap) throw CapExceeded(cap);
    frontier.push_back(*it);
  };

  std::vector<RatVec> frontier;
  admit(RatVec(points.size(), Rat(0)), frontier);
  admit(RatVec(points.size(), Rat(1)), frontier);
  for (const RatVec& g : generators) admit(g, frontier);

  while (!frontier.empty()) {
    std::vector<RatVec> batch = std::move(frontier);
    frontier.clear();
    for (const RatVec& f : batch) admit(detail::complement(f), frontier);
    for (const RatVec& f : batch)
      for (const RatVec& g : pool) {
        if (detail::pointwise_summable(f, g)) admit(detail::pointwise_sum(f, g), frontier);
        if (kind == ClosureKind::Bold) admit(detail::truncated_sum(f, g), frontier);
      }
  }

  FunctionFamily fam;
  fam.points = points;
  fam.members.assign(pool.begin(), pool.end());
  fam.kind = kind;
  return fam;
}

inline FunctionFamily clan_closure(const std::vector<std::string>& points,
                                   const std::vector<RatVec>& generators, int cap = 4096) {
  return closure_family(points, generators, cap, ClosureKind::Clan);
}

inline FunctionFamily bold_closure(const std::vector<std::string>& points,
                                   const std::vector<RatVec>& generators, int cap = 4096) {
  return closure_family(points, generators, cap, ClosureKind::Bold);
}

// Re-verification that a listed family really has the claimed closure
// properties; used on files and on freshly generated families alike.  For
// Bold families this also re-checks the Lukasiewicz identity pointwise, the
// one MV axiom that is not immediate from the construction.
struct ClosureCheck {
  bool ok = true;
  std::string reason;
};

inline ClosureCheck verify_closure(const FunctionFamily& fam, ClosureKind target) {
  ClosureCheck r;
  auto fail = [&](std::string why) {
    r.ok = false;
    r.reason = std::move(why);
    return r;
  };
  if (target == ClosureKind::Raw) return fail("no closure kind to verify");
  std::set<RatVec> pool;
  for (const RatVec& f : fam.members) {
    validate_function(fam.points, f);
    if (!pool.insert(f).second) return fail("duplicate member");
  }
  if (!pool.count(RatVec(fam.points.size(), Rat(0)))) return fail("missing constant 0");
  if (!pool.count(RatVec(fam.points.size(), Rat(1)))) return fail("missing constant 1");
  for (const RatVec& f : fam.members)
    if (!pool.count(detail::complement(f))) return fail("not closed under complement");
  for (const RatVec& f : fam.members)
    for (const RatVec& g : fam.members) {
      if (detail::pointwise_summable(f, g) && !pool.count(detail::pointwise_sum(f, g)))
        return fail("not closed under allowed sums");
      if (target == ClosureKind::Bold) {
        if (!pool.count(detail::truncated_sum(f, g)))
          return fail("not closed under truncated sums");
        RatVec lhs = detail::truncated_sum(detail::complement(
                         detail::truncated_sum(detail::complement(f), g)), g);
        RatVec rhs = detail::truncated_sum(detail::complement(
                         detail::truncated_sum(detail::complement(g), f)), f);
        if (lhs != rhs) return fail("Lukasiewicz identity fails pointwise");
      }
    }
  return r;
}

// Canonical element name: constants become 0 and  1, characteristic functions
// show their support, everything else shows its value vector.
inline std::string member_name(const std::vector<std::string>& points, const RatVec& v) {
  bool zero = true, one = true, indicator = true;
  for (const Rat& x : v) {
    if (x != 0) zero = false;
    if (x != 1) one = false;
    if (x != 0 && x != 1) indicator = false;
  }
  if (zero) return "0";
  if (one) return "1";
  std::string s;
  if (indicator) {
    s = "\xCF\x87{";  // chi
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] == 1) {
        if (!first) s += ",";
        s += points[i];
        first = false;
      }
    return s + "}";
  }
  s = "f(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rat(v[i]);
  }
  return s + ")";
}

// The induced effect algebra: one element per member, with exactly the
// allowed pointwise sums as table entries.  Element order equals member
// order, which everything downstream (states, measures) relies on.
inline Table as_effect_algebra(const FunctionFamily& fam, const std::string& label = {}) {
  if (fam.kind == ClosureKind::Raw)
    throw std::invalid_argument("family has no verified closure kind");
  std::map<RatVec, Elem> index;
  std::vector<std::string> names;
  for (size_t i = 0; i < fam.members.size(); ++i) {
    validate_function(fam.points, fam.members[i]);
    if (!index.emplace(fam.members[i], Elem(i)).second)
      throw std::invalid_argument("family has duplicate members");
    names.push_back(member_name(fam.points, fam.members[i]));
  }
  auto zero_it = index.find(RatVec(fam.points.size(), Rat(0)));
  auto one_it = index.find(RatVec(fam.points.size(), Rat(1)));
  if (zero_it == index.end() || one_it == index.end())
    throw std::invalid_argument("family is missing a constant");

  std::string lab = label.empty()
                        ? "clan(" + std::to_string(fam.members.size()) + " members)"
                        : label;
  Table t = Table::with_elements(std::move(names), zero_it->second, one_it->second, lab);
  for (size_t i = 0; i < fam.members.size(); ++i)
    for (size_t j = i; j < fam.members.size(); ++j) {
      const RatVec& f = fam.members[i];
      const RatVec& g = fam.members[j];
      if (!detail::pointwise_summable(f, g)) continue;
      auto sum_it = index.find(detail::pointwise_sum(f, g));
      if (sum_it == index.end())
        throw std::logic_error("family is not closed under its own sums");
      t.add_sum(Elem(i), Elem(j), sum_it->second);
    }
  return t;
}

// ---------------------------------------------------------------------------
// Set algebras of subsets, encoded as bit masks over the point list.

struct SetAlgebra {
  std::vector<std::string> universe;
  std::vector<uint32_t> members;  // sorted masks; always contains 0 and full
  std::vector<uint32_t> atoms;    // the partition the members generate
};

inline RatVec indicator_vector(size_t npoints, uint32_t mask) {
  RatVec v(npoints, Rat(0));
  for (size_t i = 0; i < npoints; ++i)
    if (mask & (uint32_t(1) << i)) v[i] = 1;
  return v;
}

namespace detail {

inline void derive_atoms(SetAlgebra& sa) {
  // Points with the same membership pattern share an atom.
  std::map<std::vector<bool>, uint32_t> classes;
  for (size_t i = 0; i < sa.universe.size(); ++i) {
    std::vector<bool> pattern;
    for (uint32_t m : sa.members) pattern.push_back((m >> i) & 1);
    classes[pattern] |= uint32_t(1) << i;
  }
  sa.atoms.clear();
  for (const auto& [pattern, mask] : classes) sa.atoms.push_back(mask);
  std::sort(sa.atoms.begin(), sa.atoms.end());
}

inline void verify_set_algebra(const SetAlgebra& sa) {
  uint32_t full = sa.universe.size() >= 32
                      ? ~uint32_t(0)
                      : (uint32_t(1) << sa.universe.size()) - 1;
  std::set<uint32_t> pool(sa.members.begin(), sa.members.end());
  if (!pool.count(0) || !pool.count(full))
    throw std::logic_error("set algebra misses the empty set or the universe");
  for (uint32_t a : sa.members) {
    if (!pool.count(full & ~a)) throw std::logic_error("set algebra not closed under complement");
    for (uint32_t b : sa.members)
      if (!pool.count(a & b)) throw std::logic_error("set algebra not closed under intersection");
  }
}

}  // namespace detail

// The subsets whose characteristic function is both a member and central in
// the induced table.  The induced algebra must be as_effect_algebra of the
// same family, so element i is member i.
inline SetAlgebra b0_algebra(const FunctionFamily& fam, const Algebra& induced) {
  if (fam.points.size() > 16)
    throw std::invalid_argument("set algebra extraction supports at most 16 points");
  std::map<RatVec, Elem> index;
  for (size_t i = 0; i < fam.members.size(); ++i) index.emplace(fam.members[i], Elem(i));

  SetAlgebra sa;
  sa.universe = fam.points;
  for (uint32_t mask = 0; mask < (uint32_t(1) << fam.points.size()); ++mask) {
    auto it = index.find(indicator_vector(fam.points.size(), mask));
    if (it == index.end()) continue;
    if (is_central(induced, it->second).central) sa.members.push_back(mask);
  }
  detail::verify_set_algebra(sa);
  detail::derive_atoms(sa);
  return sa;
}

// The larger family of subsets whose characteristic function is a member,
// with no centrality demand.
inline std::vector<uint32_t> s0_family(const FunctionFamily& fam) {
  if (fam.points.size() > 16)
    throw std::invalid_argument("set algebra extraction supports at most 16 points");
  std::set<RatVec> pool(fam.members.begin(), fam.members.end());
  std::vector<uint32_t> out;
  for (uint32_t mask = 0; mask < (uint32_t(1) << fam.points.size()); ++mask)
    if (pool.count(indicator_vector(fam.points.size(), mask))) out.push_back(mask);
  return out;
}

// Measurability against a finite set algebra: constant on every atom.
inline bool is_measurable(const FunctionTable& f, const SetAlgebra& algebra) {
  if (f.points != algebra.universe) throw std::invalid_argument("universe mismatch");
  validate_function(f.points, f.values);
  for (uint32_t atom : algebra.atoms) {
    std::optional<Rat> seen;
    for (size_t i = 0; i < f.points.size(); ++i) {
      if (!(atom & (uint32_t(1) << i))) continue;
      if (!seen)
        seen = f.values[i];
      else if (*seen != f.values[i])
        return false;
    }
  }
  return true;
}

// The measure a state induces on the central set algebra: mu(A) = s(chi_A).
// Finite additivity and normalization are re-verified on construction.
struct Measure {
  SetAlgebra algebra;
  RatVec values;  // aligned with algebra.members
  Rat operator()(uint32_t mask) const {
    for (size_t i = 0; i < algebra.members.size(); ++i)
      if (algebra.members[i] == mask) return values[i];
    throw std::invalid_argument("mask is not a member of the set algebra");
  }
};

inline Measure measure_from_state(const FunctionFamily& fam, const Algebra& induced,
                                  const SetAlgebra& b0, const RatVec& s) {
  StateCheck chk = is_state(induced, s);
  if (!chk.ok) throw std::invalid_argument("not a state: " + chk.reason);
  std::map<RatVec, Elem> index;
  for (size_t i = 0; i < fam.members.size(); ++i) index.emplace(fam.members[i], Elem(i));

  Measure mu;
  mu.algebra = b0;
  for (uint32_t mask : b0.members) {
    auto it = index.find(indicator_vector(fam.points.size(), mask));
    if (it == index.end()) throw std::logic_error("set algebra member is not in the family");
    mu.values.push_back(s[size_t(it->second)]);
  }
  for (size_t i = 0; i < b0.members.size(); ++i)
    for (size_t j = 0; j < b0.members.size(); ++j) {
      uint32_t a = b0.members[i], b = b0.members[j];
      if (a & b) continue;
      if (mu(a | b) != mu.values[i] + mu.values[j])
        throw std::logic_error("induced measure is not additive");
    }
  if (mu(uint32_t((uint64_t(1) << fam.points.size()) - 1)) != 1)
    throw std::logic_error("induced measure is not normalized");
  return mu;
}

// The finite integral of a member against a measure on the central algebra:
// the member must be constant on atoms, and the integral is the weighted sum
// of those constants.  bk_verify compares it with the state value for every
// measurable member; when all members are measurable the equality must be
// total.
struct BkLine {
  int member = -1;
  bool measurable = false;
  Rat state_value;
  Rat integral;  // meaningful only when measurable
  bool equal = false;
};

struct BkReport {
  Measure mu;
  std::vector<BkLine> lines;
  std::vector<int> measurable_members;  // the sub-family the restriction statement covers
  bool all_measurable = true;
  bool verdict = true;  // equality on every measurable member
};

inline BkReport bk_verify(const FunctionFamily& fam, const Algebra& induced,
                          const SetAlgebra& b0, const RatVec& s) {
  BkReport r;
  r.mu = measure_from_state(fam, induced, b0, s);
  for (size_t i = 0; i < fam.members.size(); ++i) {
    BkLine line;
    line.member = int(i);
    line.state_value = s[i];
    FunctionTable f{fam.points, fam.members[i]};
    line.measurable = is_measurable(f, b0);
    if (line.measurable) {
      Rat total = 0;
      for (uint32_t atom : b0.atoms) {
        size_t pt = 0;
        while (!(atom & (uint32_t(1) << pt))) ++pt;
        total += fam.members[i][pt] * r.mu(atom);
      }
      line.integral = total;
      line.equal = line.state_value == line.integral;
      if (!line.equal) r.verdict = false;
      r.measurable_members.push_back(int(i));
    } else {
      r.all_measurable = false;
    }
    r.lines.push_back(std::move(line));
  }
  return r;
}

// Evaluation at a point is always a state on the induced table.
inline RatVec evaluation_state(const FunctionFamily& fam, size_t point) {
  if (point >= fam.points.size()) throw std::invalid_argument("no such point");
  RatVec s(fam.members.size());
  for (size_t i = 0; i < fam.members.size(); ++i) s[i] = fam.members[i][point];
  return s;
}

// ---------------------------------------------------------------------------
// The midpoint family: functions on {a,b,c} with denominator-D values where
// the value at c is forced to be the average of the values at a and b.  The
// constraint is invisible to the central set algebra, which collapses to
// {empty, X}, so two different probability measures on the three points
// induce the same state by integration.

struct MidpointReport {
  FunctionFamily family;
  Table table;
  bool closure_ok = false;
  RefinementReport rdp;      // honest outcome of the refinement check
  SetAlgebra b0;
  bool b0_trivial = false;   // only the empty set and the universe
  int nonmeasurable_member = -1;
  RatVec integral_dirac_c;   // per member: integral against the point mass at c
  RatVec integral_mix_ab;    // per member: integral against (delta_a + delta_b)/2
  bool integrals_identical = false;
  bool induced_is_state = false;
  bool dirac_states_distinct = false;  // evaluation at a differs from evaluation at b
  bool state_extremal = true;          // expected false: the state is a proper midpoint
};

inline MidpointReport midpoint_demo(int denom) {
  if (denom < 2 || denom > 16 || denom % 2 != 0)
    throw std::invalid_argument("midpoint denominator must be even and between 2 and 16");
  MidpointReport r;
  r.family.points = {"a", "b", "c"};
  for (int va = 0; va <= denom; ++va)
    for (int vb = 0; vb <= denom; ++vb) {
      if ((va + vb) % 2 != 0) continue;
      r.family.members.push_back({Rat(va, denom), Rat(vb, denom), Rat(va + vb, 2 * denom)});
    }
  std::sort(r.family.members.begin(), r.family.members.end());
  r.family.kind = ClosureKind::Clan;
  r.closure_ok = verify_closure(r.family, ClosureKind::Clan).ok;

  r.table = as_effect_algebra(r.family, "midpoint(" + std::to_string(denom) + ")");
  Algebra alg(r.table);
  r.rdp = check_rdp(alg);
  r.b0 = b0_algebra(r.family, alg);
  uint32_t full = (uint32_t(1) << 3) - 1;
  r.b0_trivial = r.b0.members == std::vector<uint32_t>{0, full};
  for (size_t i = 0; i < r.family.members.size() && r.nonmeasurable_member < 0; ++i)
    if (!is_measurable(FunctionTable{r.family.points, r.family.members[i]}, r.b0))
      r.nonmeasurable_member = int(i);

  // Integrals over the full powerset of X: the point mass at c against the
  // even mixture of the point masses at a and b.
  for (const RatVec& f : r.family.members) {
    r.integral_dirac_c.push_back(f[2]);
    r.integral_mix_ab.push_back((f[0] + f[1]) / 2);
  }
  r.integrals_identical = r.integral_dirac_c == r.integral_mix_ab;
  r.induced_is_state = is_state(alg, r.integral_dirac_c).ok;

  RatVec at_a = evaluation_state(r.family, 0);
  RatVec at_b = evaluation_state(r.family, 1);
  r.dirac_states_distinct = at_a != at_b;
  r.state_extremal = is_extremal(state_space(alg), r.integral_dirac_c);
  return r;
}

// The parity clan: characteristic functions of even-cardinality subsets of an
// even-sized point set.  Closed as listed; its induced table is the standard
// non-refinement, non-lattice example.
inline FunctionFamily parity_family(int n) {
  if (n < 2 || n > 16 || n % 2 != 0)
    throw std::invalid_argument("parity family needs an even point count between 2 and 16");
  FunctionFamily fam;
  for (int i = 1; i <= n; ++i) fam.points.push_back(std::to_string(i));
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
    if (__builtin_popcount(mask) % 2 == 0)
      fam.members.push_back(indicator_vector(size_t(n), mask));
  std::sort(fam.members.begin(), fam.members.end());
  fam.kind = ClosureKind::Clan;
  return fam;
}

// ---------------------------------------------------------------------------
// Family files: a points line, then one line per function.
//
//   points: p q r
//   func low: 0 1/4 1/2
//   func high: 1 3/4 1/2

struct FamilyFile {
  std::vector<std::string> points;
  std::vector<std::string> names;
  std::vector<RatVec> funcs;
};

inline FamilyFile parse_family(std::istream& in) {
  FamilyFile out;
  bool saw_points = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string body = (hash == std::string::npos) ? raw : raw.substr(0, hash);
    std::istringstream ls(body);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "points:") {
      if (saw_points) fail("duplicate points line");
      saw_points = true;
      std::string tok;
      while (ls >> tok) {
        for (const std::string& p : out.points)
          if (p == tok) fail("duplicate point '" + tok + "'");
        out.points.push_back(tok);
      }
      if (out.points.empty()) fail("empty point list");
    } else if (head == "func") {
      if (!saw_points) fail("func before points line");
      std::string name;
      if (!(ls >> name) || name.size() < 2 || name.back() != ':')
        fail("expected 'func NAME:'");
      name.pop_back();
      RatVec vals;
      std::string tok;
      while (ls >> tok) {
        std::optional<Rat> val = parse_rat(tok);
        if (!val) fail("bad rational '" + tok + "'");
        vals.push_back(*val);
      }
      if (vals.size() != out.points.size())
        fail("function '" + name + "' has " + std::to_string(vals.size()) + " values for " +
             std::to_string(out.points.size()) + " points");
      for (const Rat& x : vals)
        if (x < 0 || x > 1) fail("value outside [0,1] in '" + name + "'");
      out.names.push_back(name);
      out.funcs.push_back(std::move(vals));
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!saw_points) throw std::invalid_argument("missing points line");
  return out;
}

}  // namespace ea
