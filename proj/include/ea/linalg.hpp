#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ea/rational.hpp"

namespace ea {

using RatVec = std::vector<Rat>;

enum class PivotOrder { Forward, Reverse };

// Row rank of a dense rational matrix.
inline int rank_rows(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < int(rows.size()); ++c) {
    size_t piv = size_t(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[size_t(rank)], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (int(r) == rank || rows[r][c] == 0) continue;
      Rat f = rows[r][c] / rows[size_t(rank)][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[size_t(rank)][k];
    }
    ++rank;
  }
  return rank;
}

// Phase-1 simplex: find x >= 0 with A x = b, or report infeasibility.
// Bland's rule over the given column preference keeps every run deterministic
// and termination guaranteed; the order parameter picks the preference.
inline std::optional<RatVec> feasible_point(std::vector<RatVec> A, RatVec b,
                                            PivotOrder order) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& x : A[i]) x = -x;
      b[i] = -b[i];
    }

  // Columns: n structural then m artificial; artificials start basic.
  size_t width = n + m;
  std::vector<RatVec> tab(m, RatVec(width + 1, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) tab[i][j] = A[i][j];
    tab[i][n + i] = 1;
    tab[i][width] = b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  RatVec obj(width + 1, Rat(0));  // Sum of artificial rows: the phase-1 cost.
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= width; ++j)
      if (j < n || j == width) obj[j] += tab[i][j];

  std::vector<size_t> pref(n);
  for (size_t j = 0; j < n; ++j)
    pref[j] = (order == PivotOrder::Forward) ? j : n - 1 - j;
  // One total order for both pivot rules; artificials rank last.
  std::vector<size_t> var_rank(width);
  for (size_t r = 0; r < n; ++r) var_rank[pref[r]] = r;
  for (size_t j = n; j < width; ++j) var_rank[j] = j;

  while (true) {
    size_t enter = width;
    for (size_t j : pref)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = tab[i][width] / tab[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && var_rank[basis[i]] < var_rank[basis[leave]])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;  // unbounded: cannot happen for phase 1

    Rat p = tab[leave][enter];
    for (size_t k = 0; k <= width; ++k) tab[leave][k] /= p;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rat f = tab[i][enter];
      for (size_t k = 0; k <= width; ++k) tab[i][k] -= f * tab[leave][k];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (size_t k = 0; k <= width; ++k) obj[k] -= f * tab[leave][k];
    }
    basis[leave] = enter;
  }

  if (obj[width] != 0) return std::nullopt;
  RatVec x(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = tab[i][width];
  return x;
}

}  // namespace ea
