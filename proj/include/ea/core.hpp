#pragma once

// Finite effect algebras as explicit partial Cayley tables.
//
// A table holds the complete partial sum on interned element indices.
// verify_axioms checks, by exhaustion, that the table is an effect algebra:
//   (i)   commutativity of the stored sum
//   (ii)  associativity, including agreement of definedness
//   (iii) a unique orthosupplement a' with a + a' = 1 for every a
//   (iv)  a + 1 defined only for a = 0
// plus the derived-order sanity bundle (reported under "order"): a <= b iff
// some c has a + c = b must be a partial order, and + must be cancellative.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ea/bits.hpp"

namespace ea {

using Elem = int;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

class Table {
public:
  std::string label;

  static Table with_elements(std::vector<std::string> names, Elem zero, Elem one,
                             std::string label = {}) {
    Table t;
    t.label = std::move(label);
    t.names_ = std::move(names);
    t.zero_ = zero;
    t.one_ = one;
    t.sum_.assign(size_t(t.size()) * t.size(), -1);
    for (Elem a = 0; a < t.size(); ++a) t.set_sum_raw(t.zero_, a, a);
    return t;
  }

  int size() const { return int(names_.size()); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& name(Elem a) const { return names_[size_t(a)]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Elem> index(const std::string& name) const {
    for (Elem a = 0; a < size(); ++a)
      if (names_[size_t(a)] == name) return a;
    return std::nullopt;
  }

  Elem sum(Elem a, Elem b) const { return sum_[size_t(a) * size() + b]; }  // -1 if undefined
  bool defined(Elem a, Elem b) const { return sum(a, b) >= 0; }

  // Records a+b=c and b+a=c. Returns false on conflict with an existing entry.
  bool add_sum(Elem a, Elem b, Elem c) {
    Elem cur = sum(a, b);
    if (cur >= 0) return cur == c;
    set_sum_raw(a, b, c);
    return true;
  }

  // Nonzero unordered entries, row-major; the state-space equality system
  // is generated from exactly these.
  template <class F>
  void for_each_entry(F f) const {
    for (Elem a = 0; a < size(); ++a) {
      if (a == zero_) continue;
      for (Elem b = a; b < size(); ++b) {
        if (b == zero_) continue;
        Elem c = sum(a, b);
        if (c >= 0) f(a, b, c);
      }
    }
  }

private:
  void set_sum_raw(Elem a, Elem b, Elem c) {
    sum_[size_t(a) * size() + b] = c;
    sum_[size_t(b) * size() + a] = c;
  }

  std::vector<std::string> names_;
  Elem zero_ = 0, one_ = 0;
  std::vector<int32_t> sum_;
};

// ---------------------------------------------------------------------------
// File format
//
//   # comment
//   elements: a b c        (all elements except the reserved 0 and 1)
//   zero: 0
//   one: 1
//   sum: a b c             (meaning a + b = c; entries are symmetrized)
//
// Element order is declaration order with 0 first and 1 last. Sums with a
// zero operand are implied and need not be listed; if listed they must agree.

inline Table parse_table(std::istream& in, const std::string& label = {}) {
  std::vector<std::string> middles;
  bool saw_elements = false, saw_zero = false, saw_one = false;
  struct SumLine {
    std::string a, b, c;
    int line;
  };
  std::vector<SumLine> sums;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string body = (hash == std::string::npos) ? raw : raw.substr(0, hash);
    std::istringstream ls(body);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "elements:") {
      if (saw_elements) throw ParseError(lineno, "duplicate elements: line");
      saw_elements = true;
      std::string tok;
      while (ls >> tok) {
        if (tok == "0" || tok == "1")
          throw ParseError(lineno, "element name '" + tok + "' is reserved");
        if (std::find(middles.begin(), middles.end(), tok) != middles.end())
          throw ParseError(lineno, "duplicate element '" + tok + "'");
        middles.push_back(tok);
      }
    } else if (head == "zero:") {
      std::string tok;
      if (!(ls >> tok) || tok != "0") throw ParseError(lineno, "expected 'zero: 0'");
      saw_zero = true;
    } else if (head == "one:") {
      std::string tok;
      if (!(ls >> tok) || tok != "1") throw ParseError(lineno, "expected 'one: 1'");
      saw_one = true;
    } else if (head == "sum:") {
      SumLine s;
      s.line = lineno;
      std::string extra;
      if (!(ls >> s.a >> s.b >> s.c) || (ls >> extra))
        throw ParseError(lineno, "expected 'sum: A B C'");
      sums.push_back(std::move(s));
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!saw_zero) throw ParseError(lineno, "missing 'zero: 0' line");
  if (!saw_one) throw ParseError(lineno, "missing 'one: 1' line");

  std::vector<std::string> names;
  names.reserve(middles.size() + 2);
  names.push_back("0");
  names.insert(names.end(), middles.begin(), middles.end());
  names.push_back("1");
  Table t = Table::with_elements(std::move(names), 0, int(middles.size()) + 1, label);

  for (const auto& s : sums) {
    auto a = t.index(s.a), b = t.index(s.b), c = t.index(s.c);
    if (!a) throw ParseError(s.line, "unknown element '" + s.a + "'");
    if (!b) throw ParseError(s.line, "unknown element '" + s.b + "'");
    if (!c) throw ParseError(s.line, "unknown element '" + s.c + "'");
    if (!t.add_sum(*a, *b, *c))
      throw ParseError(s.line, "conflicting sum for (" + s.a + "," + s.b + "): already " +
                                   t.name(t.sum(*a, *b)) + ", now " + s.c);
  }
  return t;
}

// Canonical file form of a table; parse_table(format_table(t)) reproduces t.
// Requires the 0-first / 1-last element layout of the file format.
inline std::string format_table(const Table& t) {
  std::ostringstream os;
  os << "elements:";
  for (Elem a = 0; a < t.size(); ++a)
    if (a != t.zero() && a != t.one()) os << ' ' << t.name(a);
  os << "\nzero: 0\none: 1\n";
  t.for_each_entry([&](Elem a, Elem b, Elem c) {
    os << "sum: " << t.name(a) << ' ' << t.name(b) << ' ' << t.name(c) << '\n';
  });
  return os.str();
}

// ---------------------------------------------------------------------------
// Axiom verification

enum class Axiom { Commutativity, Associativity, Orthosupplement, ZeroOne, Order };

inline const char* axiom_id(Axiom a) {
  switch (a) {
    case Axiom::Commutativity: return "i";
    case Axiom::Associativity: return "ii";
    case Axiom::Orthosupplement: return "iii";
    case Axiom::ZeroOne: return "iv";
    case Axiom::Order: return "order";
  }
  return "?";
}

struct Violation {
  Axiom axiom;
  std::vector<Elem> witness;
  std::string message;
};

struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;  // capped; total_violations keeps the full count
  size_t total_violations = 0;

  void add(Axiom ax, std::vector<Elem> w, std::string msg) {
    passed = false;
    ++total_violations;
    if (violations.size() < 8) violations.push_back({ax, std::move(w), std::move(msg)});
  }
};

namespace detail {
// leq rows via the existential definition; needs only the raw table.
inline std::vector<Bits> derive_below(const Table& t) {
  int n = t.size();
  std::vector<Bits> below(static_cast<size_t>(n), Bits(n));  // below[b] = {a : a <= b}
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      Elem b = t.sum(a, c);
      if (b >= 0) below[size_t(b)].set(a);
    }
  return below;
}
}  // namespace detail

inline AxiomReport verify_axioms(const Table& t) {
  AxiomReport rep;
  int n = t.size();

  if (t.zero() == t.one()) {
    rep.add(Axiom::ZeroOne, {t.zero()}, "zero and one coincide");
    return rep;
  }
  for (Elem a = 0; a < n; ++a)
    if (t.sum(t.zero(), a) != a) {
      rep.add(Axiom::Order, {a}, "0 + " + t.name(a) + " != " + t.name(a));
      return rep;  // the rest of the derivation assumes 0 is neutral
    }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (t.sum(a, b) != t.sum(b, a))
        rep.add(Axiom::Commutativity, {a, b}, "asymmetric entry");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = t.sum(a, b);
      for (Elem c = 0; c < n; ++c) {
        Elem bc = t.sum(b, c);
        Elem lhs = (ab >= 0) ? t.sum(ab, c) : -1;
        Elem rhs = (bc >= 0) ? t.sum(a, bc) : -1;
        if (lhs != rhs)
          rep.add(Axiom::Associativity, {a, b, c},
                  (lhs >= 0 && rhs >= 0) ? "grouping disagrees" : "definedness disagrees");
      }
    }

  for (Elem a = 0; a < n; ++a) {
    int count = 0;
    for (Elem b = 0; b < n; ++b)
      if (t.sum(a, b) == t.one()) ++count;
    if (count != 1)
      rep.add(Axiom::Orthosupplement, {a},
              count == 0 ? "no orthosupplement" : "multiple orthosupplements");
  }

  for (Elem a = 0; a < n; ++a)
    if (a != t.zero() && t.defined(a, t.one()))
      rep.add(Axiom::ZeroOne, {a}, t.name(a) + " + 1 is defined");

  // Cancellativity: each row a -> (c -> a+c) is injective where defined.
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem> seen(size_t(n), -1);
    for (Elem c = 0; c < n; ++c) {
      Elem b = t.sum(a, c);
      if (b < 0) continue;
      if (seen[size_t(b)] >= 0)
        rep.add(Axiom::Order, {a, seen[size_t(b)], c},
                "difference not unique at " + t.name(b));
      else
        seen[size_t(b)] = c;
    }
  }

  auto below = detail::derive_below(t);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (below[size_t(b)].test(a) && below[size_t(a)].test(b))
        rep.add(Axiom::Order, {a, b}, "antisymmetry fails");
  // Transitivity: a <= b implies below[a] under below[b].
  for (Elem b = 0; b < n; ++b)
    for (Elem a = 0; a < n; ++a)
      if (below[size_t(b)].test(a) && !below[size_t(a)].subset_of(below[size_t(b)])) {
        Elem bad = -1;
        below[size_t(a)].for_each([&](int z) {
          if (bad < 0 && !below[size_t(b)].test(z)) bad = z;
        });
        rep.add(Axiom::Order, {bad, a, b}, "transitivity fails");
      }

  return rep;
}

// ---------------------------------------------------------------------------
// Verified algebra with derived order structure.

class Algebra {
public:
  explicit Algebra(Table table) : t_(std::move(table)) {
    AxiomReport rep = verify_axioms(t_);
    if (!rep.passed) {
      std::string msg = "not an effect algebra";
      if (!rep.violations.empty()) msg += " (axiom " + std::string(axiom_id(rep.violations[0].axiom)) + ")";
      throw std::invalid_argument(msg);
    }
    init_order();
  }

  // For tables whose axioms were already checked by the caller.
  struct Trusted {};
  Algebra(Table table, Trusted) : t_(std::move(table)) { init_order(); }

  const Table& table() const { return t_; }
  int size() const { return t_.size(); }
  Elem zero() const { return t_.zero(); }
  Elem one() const { return t_.one(); }
  const std::string& name(Elem a) const { return t_.name(a); }

  bool leq(Elem a, Elem b) const { return below_[size_t(b)].test(a); }
  const Bits& below(Elem a) const { return below_[size_t(a)]; }  // {z : z <= a}
  const Bits& above(Elem a) const { return above_[size_t(a)]; }  // {z : a <= z}
  Elem orthosupplement(Elem a) const { return ortho_[size_t(a)]; }

  // The unique c with a + c = b; requires a <= b.
  Elem difference(Elem a, Elem b) const {
    for (Elem c = 0; c < size(); ++c)
      if (t_.sum(a, c) == b) return c;
    throw std::invalid_argument("difference requires " + name(a) + " <= " + name(b));
  }

  // Greatest lower bound in the derived order: the common lower bound that
  // dominates every other one, if a single such element exists.
  std::optional<Elem> meet(Elem a, Elem b) const {
    Bits lows = below_[size_t(a)] & below_[size_t(b)];
    return pick_dominating(lows, /*from_below=*/true);
  }

  std::optional<Elem> join(Elem a, Elem b) const {
    Bits ups = above_[size_t(a)] & above_[size_t(b)];
    return pick_dominating(ups, /*from_below=*/false);
  }

private:
  void init_order() {
    below_ = detail::derive_below(t_);
    int n = t_.size();
    above_.assign(size_t(n), Bits(n));
    for (Elem b = 0; b < n; ++b)
      below_[size_t(b)].for_each([&](int a) { above_[size_t(a)].set(b); });
    ortho_.assign(size_t(n), -1);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (t_.sum(a, b) == t_.one()) ortho_[size_t(a)] = b;
  }

  std::optional<Elem> pick_dominating(const Bits& cand, bool from_below) const {
    std::optional<Elem> best;
    cand.for_each([&](int z) {
      if (best) return;
      const Bits& dom = from_below ? below_[size_t(z)] : above_[size_t(z)];
      if (cand.subset_of(dom)) best = z;
    });
    return best;
  }

  Table t_;
  std::vector<Bits> below_, above_;
  std::vector<Elem> ortho_;
};

// ---------------------------------------------------------------------------

struct HomReport {
  bool ok = true;
  std::string reason;         // empty when ok
  std::vector<Elem> witness;  // offending elements of the domain
};

// map[a] is the image in target of element a of source. A homomorphism sends
// 0 to 0 and 1 to 1 and preserves every defined sum.
inline HomReport is_homomorphism(const Algebra& source, const Algebra& target,
                                 const std::vector<Elem>& map) {
  HomReport r;
  if (int(map.size()) != source.size()) {
    r.ok = false;
    r.reason = "map size mismatch";
    return r;
  }
  for (Elem a : map)
    if (a < 0 || a >= target.size()) {
      r.ok = false;
      r.reason = "map image out of range";
      return r;
    }
  if (map[size_t(source.zero())] != target.zero()) {
    r.ok = false;
    r.reason = "zero not preserved";
    r.witness = {source.zero()};
    return r;
  }
  if (map[size_t(source.one())] != target.one()) {
    r.ok = false;
    r.reason = "one not preserved";
    r.witness = {source.one()};
    return r;
  }
  for (Elem a = 0; a < source.size(); ++a)
    for (Elem b = a; b < source.size(); ++b) {
      Elem c = source.table().sum(a, b);
      if (c < 0) continue;
      Elem fc = target.table().sum(map[size_t(a)], map[size_t(b)]);
      if (fc != map[size_t(c)]) {
        r.ok = false;
        r.reason = (fc < 0) ? "image sum undefined" : "image sum disagrees";
        r.witness = {a, b};
        return r;
      }
    }
  return r;
}

}  // namespace ea
