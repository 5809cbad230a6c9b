#pragma once

// Deterministic table generators. Every generator emits elements in a fixed
// declaration order (0 first, 1 last for these families) so downstream
// reports are byte-stable.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ea/core.hpp"

namespace ea {

namespace detail {
inline std::string subset_name(unsigned mask, const char* prefix) {
  std::string s(prefix);
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1) s += std::to_string(i + 1);
  return s;
}

// Subsets of {1..n} ordered by (size, mask); keep_even filters to even sizes.
inline std::vector<unsigned> subset_order(int n, bool keep_even) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (!keep_even || __builtin_popcount(m) % 2 == 0) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

inline Table subset_table(int n, bool keep_even, const std::string& label,
                          const char* prefix) {
  auto masks = subset_order(n, keep_even);
  unsigned full = (1u << n) - 1;
  std::vector<std::string> names;
  for (unsigned m : masks)
    names.push_back(m == 0 ? "0" : m == full ? "1" : subset_name(m, prefix));
  Table t = Table::with_elements(names, 0, int(masks.size()) - 1, label);
  std::vector<int> at(1u << n, -1);
  for (int i = 0; i < int(masks.size()); ++i) at[masks[size_t(i)]] = i;
  for (int i = 0; i < int(masks.size()); ++i)
    for (int j = i; j < int(masks.size()); ++j) {
      unsigned a = masks[size_t(i)], b = masks[size_t(j)];
      if ((a & b) == 0 && at[a | b] >= 0) t.add_sum(i, j, at[a | b]);
    }
  return t;
}
}  // namespace detail

// Boolean algebra of all subsets of an n-point set; a + b defined iff disjoint.
inline Table boolean_table(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("boolean(n) needs 1 <= n <= 8");
  return detail::subset_table(n, false, "boolean(" + std::to_string(n) + ")", "x");
}

// Characteristic functions of even subsets of {1..n}; the parity clan's table.
inline Table parity_table(int n) {
  if (n < 2 || n > 8 || n % 2 != 0)
    throw std::invalid_argument("parity(n) needs even n with 2 <= n <= 8");
  return detail::subset_table(n, true, "parity(" + std::to_string(n) + ")", "c");
}

// Linear chain 0 < g1 < ... < 1 with n steps; i + j defined iff i + j <= n.
inline Table chain_table(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("chain(n) needs 1 <= n <= 64");
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i)
    names.push_back(i == 0 ? "0" : i == n ? "1" : "g" + std::to_string(i));
  Table t = Table::with_elements(names, 0, n, "chain(" + std::to_string(n) + ")");
  for (int i = 1; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) t.add_sum(i, j, i + j);
  return t;
}

// Product of two chains under the componentwise partial sum.
inline Table grid_table(int m, int n) {
  if (m < 1 || n < 1 || m > 16 || n > 16)
    throw std::invalid_argument("grid(m,n) needs 1 <= m,n <= 16");
  std::vector<std::string> names;
  auto idx = [n](int i, int j) { return i * (n + 1) + j; };
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      names.push_back(i == 0 && j == 0 ? "0"
                      : i == m && j == n
                          ? "1"
                          : "g" + std::to_string(i) + "_" + std::to_string(j));
  Table t = Table::with_elements(names, 0, idx(m, n),
                                 "grid(" + std::to_string(m) + "," + std::to_string(n) + ")");
  for (int i1 = 0; i1 <= m; ++i1)
    for (int j1 = 0; j1 <= n; ++j1)
      for (int i2 = 0; i1 + i2 <= m; ++i2)
        for (int j2 = 0; j1 + j2 <= n; ++j2)
          t.add_sum(idx(i1, j1), idx(i2, j2), idx(i1 + i2, j1 + j2));
  return t;
}

// Horizontal sum of n four-element blocks: atoms a_i with a_i + b_i = 1 and
// no other nonzero sums.
inline Table mo_table(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("mo(n) needs 1 <= n <= 16");
  std::vector<std::string> names{"0"};
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
  names.push_back("1");
  Table t = Table::with_elements(names, 0, 2 * n + 1, "mo(" + std::to_string(n) + ")");
  for (int i = 1; i <= n; ++i) t.add_sum(i, n + i, 2 * n + 1);
  return t;
}

// Cartesian product; sums are defined componentwise.
inline Table product_table(const Table& a, const Table& b) {
  size_t total = size_t(a.size()) * b.size();
  if (total > 4096) throw std::invalid_argument("product table too large");
  auto idx = [&](Elem x, Elem y) { return int(x) * b.size() + y; };
  std::vector<std::string> names(total);
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y) {
      bool z = x == a.zero() && y == b.zero();
      bool u = x == a.one() && y == b.one();
      names[size_t(idx(x, y))] = z ? "0" : u ? "1" : a.name(x) + "." + b.name(y);
    }
  Table t = Table::with_elements(names, idx(a.zero(), b.zero()), idx(a.one(), b.one()),
                                 "product(" + a.label + "," + b.label + ")");
  for (Elem x1 = 0; x1 < a.size(); ++x1)
    for (Elem y1 = 0; y1 < b.size(); ++y1)
      for (Elem x2 = 0; x2 < a.size(); ++x2) {
        Elem xs = a.sum(x1, x2);
        if (xs < 0) continue;
        for (Elem y2 = 0; y2 < b.size(); ++y2) {
          Elem ys = b.sum(y1, y2);
          if (ys >= 0) t.add_sum(idx(x1, y1), idx(x2, y2), idx(xs, ys));
        }
      }
  return t;
}

// Every effect algebra on at most kmax ordered elements, by brute force over
// partial sum tables. Tables are emitted with middles named a, b, c in a fixed
// cell order, so relabelings of the same algebra appear as distinct entries.
inline std::vector<Table> exhaustive_tables(int kmax) {
  if (kmax < 2 || kmax > 5) throw std::invalid_argument("exhaustive(k) needs 2 <= k <= 5");
  std::vector<Table> out;
  const char* middle_names[] = {"a", "b", "c"};
  for (int s = 2; s <= kmax; ++s) {
    int mm = s - 2;
    Elem one = s - 1;
    std::vector<std::string> names{"0"};
    for (int i = 0; i < mm; ++i) names.push_back(middle_names[i]);
    names.push_back("1");

    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem i = 1; i <= mm; ++i)
      for (Elem j = i; j <= mm; ++j) cells.push_back({i, j});

    // Candidate results per cell: undefined, another middle, or 1. A result
    // equal to an operand or to 0 always violates cancellativity, so skip it.
    std::vector<std::vector<Elem>> options(cells.size());
    for (size_t c = 0; c < cells.size(); ++c) {
      options[c].push_back(-1);
      for (Elem v = 1; v <= mm; ++v)
        if (v != cells[c].first && v != cells[c].second) options[c].push_back(v);
      options[c].push_back(one);
    }

    std::vector<size_t> pick(cells.size(), 0);
    while (true) {
      Table t = Table::with_elements(names, 0, one);
      for (size_t c = 0; c < cells.size(); ++c) {
        Elem v = options[c][pick[c]];
        if (v >= 0) t.add_sum(cells[c].first, cells[c].second, v);
      }
      if (verify_axioms(t).passed) {
        t.label = "exhaustive#" + std::to_string(out.size()) + "(n=" + std::to_string(s) + ")";
        out.push_back(std::move(t));
      }
      size_t c = 0;
      while (c < cells.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
      if (c == cells.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generator expressions: boolean(n), chain(n), grid(m,n), mo(n), parity(n),
// product(expr,expr), exhaustive(k).

namespace detail {
struct SpecParser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("corpus spec '" + s + "': " + msg);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected generator name at offset " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
  int number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected number at offset " + std::to_string(pos));
    return std::stoi(s.substr(start, pos - start));
  }

  std::vector<Table> expr() {
    std::string name = ident();
    if (!eat('(')) fail("expected '(' after " + name);
    std::vector<Table> result;
    if (name == "boolean") {
      result.push_back(boolean_table(number()));
    } else if (name == "chain") {
      result.push_back(chain_table(number()));
    } else if (name == "mo") {
      result.push_back(mo_table(number()));
    } else if (name == "parity") {
      result.push_back(parity_table(number()));
    } else if (name == "exhaustive") {
      result = exhaustive_tables(number());
    } else if (name == "grid") {
      int m = number();
      if (!eat(',')) fail("grid needs two arguments");
      result.push_back(grid_table(m, number()));
    } else if (name == "product") {
      auto lhs = expr();
      if (!eat(',')) fail("product needs two arguments");
      auto rhs = expr();
      if (lhs.size() != 1 || rhs.size() != 1) fail("product operands must be single tables");
      result.push_back(product_table(lhs[0], rhs[0]));
    } else {
      fail("unknown generator '" + name + "'");
    }
    if (!eat(')')) fail("expected ')'");
    return result;
  }
};
}  // namespace detail

inline std::vector<Table> corpus(const std::string& spec) {
  detail::SpecParser p{spec};
  auto tables = p.expr();
  p.skip_ws();
  if (p.pos != spec.size()) p.fail("trailing input");
  return tables;
}

// The fixed mix exercised by the suite runner and the property tests:
// products of chains, Boolean blocks, a horizontal sum, the parity clan's
// table, and the full small-size enumeration.
inline std::vector<Table> standard_corpus() {
  std::vector<Table> out;
  for (int n = 1; n <= 4; ++n) out.push_back(boolean_table(n));
  for (int n = 2; n <= 6; ++n) out.push_back(chain_table(n));
  out.push_back(grid_table(2, 2));
  out.push_back(grid_table(2, 3));
  out.push_back(product_table(boolean_table(2), chain_table(2)));
  out.push_back(product_table(chain_table(2), chain_table(3)));
  out.push_back(mo_table(2));
  out.push_back(parity_table(6));
  for (auto& t : exhaustive_tables(5)) out.push_back(std::move(t));
  return out;
}

}  // namespace ea
