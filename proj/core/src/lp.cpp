#include "redforge/lp.hpp"

#include <optional>

#include "redforge/errors.hpp"

namespace redforge {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> T;  // rows: coefficients then rhs
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t col) {
    Rational p = T[r][col];
    for (auto& v : T[r]) v /= p;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (i == r || T[i][col] == 0) continue;
      Rational f = T[i][col];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[r][j];
    }
    basis[r] = col;
  }

  // Maximizes obj over the current basis; false when unbounded.
  bool optimize(const std::vector<Rational>& obj, std::size_t usable_cols) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable_cols && !entering; ++j) {
        Rational d = obj[j];
        for (std::size_t r = 0; r < T.size(); ++r) d -= obj[basis[r]] * T[r][j];
        if (d > 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < T.size(); ++r) {
        if (T[r][*entering] <= 0) continue;
        Rational ratio = T[r][cols] / T[r][*entering];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *entering);
    }
  }
};

// Solves M z = rhs for square M; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && M[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(M[p], M[col]);
    std::swap(rhs[p], rhs[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col] == 0) continue;
      Rational f = M[i][col] / M[col][col];
      for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= M[i][i];
  return rhs;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t rows = lp.A.size();
  const std::size_t n = lp.c.size();
  for (const auto& row : lp.A) {
    if (row.size() != n) throw Error("LP row length does not match the objective");
  }
  if (lp.b.size() != rows) throw Error("LP right-hand side has the wrong length");

  Tableau tab;
  tab.cols = n + rows;
  tab.basis.resize(rows);
  std::vector<std::size_t> row_of(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Rational> line(tab.cols + 1);
    bool flip = lp.b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) line[j] = flip ? Rational(-lp.A[r][j]) : lp.A[r][j];
    line[n + r] = 1;
    line[tab.cols] = flip ? Rational(-lp.b[r]) : lp.b[r];
    tab.T.push_back(std::move(line));
    tab.basis[r] = n + r;
    row_of[r] = r;
  }

  std::vector<Rational> phase1(tab.cols);
  for (std::size_t j = n; j < tab.cols; ++j) phase1[j] = -1;
  tab.optimize(phase1, tab.cols);
  Rational infeas = 0;
  for (std::size_t r = 0; r < tab.T.size(); ++r) {
    if (tab.basis[r] >= n) infeas += tab.T[r][tab.cols];
  }
  LpSolution sol;
  if (infeas != 0) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  // drive artificials out of the basis; rows where that is impossible are redundant
  for (std::size_t r = 0; r < tab.T.size();) {
    if (tab.basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (tab.T[r][j] != 0) col = j;
    }
    if (col) {
      tab.pivot(r, *col);
      ++r;
    } else {
      tab.T.erase(tab.T.begin() + static_cast<std::ptrdiff_t>(r));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(r));
      row_of.erase(row_of.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  std::vector<Rational> phase2(tab.cols);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.c[j];
  if (!tab.optimize(phase2, n)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < tab.T.size(); ++r) sol.x[tab.basis[r]] = tab.T[r][tab.cols];
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += lp.c[j] * sol.x[j];

  // dual from Bᵀ y = c_B over the rows that survived phase one (the row order is
  // the original one, since rows were only erased)
  const std::size_t k = tab.T.size();
  std::vector<std::vector<Rational>> BT(k, std::vector<Rational>(k));
  std::vector<Rational> cb(k);
  for (std::size_t i = 0; i < k; ++i) {
    cb[i] = lp.c[tab.basis[i]];
    for (std::size_t r = 0; r < k; ++r) BT[i][r] = lp.A[row_of[r]][tab.basis[i]];
  }
  sol.y.assign(rows, Rational(0));
  if (auto y = solve_square(BT, cb)) {
    for (std::size_t r = 0; r < k; ++r) sol.y[row_of[r]] = (*y)[r];
  }
  return sol;
}

bool verify_optimality(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal) return false;
  const std::size_t n = lp.c.size();
  if (sol.x.size() != n || sol.y.size() != lp.A.size()) return false;
  for (const auto& v : sol.x) {
    if (v < 0) return false;
  }
  Rational primal = 0;
  for (std::size_t j = 0; j < n; ++j) primal += lp.c[j] * sol.x[j];
  for (std::size_t r = 0; r < lp.A.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.A[r][j] * sol.x[j];
    if (lhs != lp.b[r]) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (std::size_t r = 0; r < lp.A.size(); ++r) col += lp.A[r][j] * sol.y[r];
    if (col < lp.c[j]) return false;
  }
  Rational dual = 0;
  for (std::size_t r = 0; r < lp.A.size(); ++r) dual += lp.b[r] * sol.y[r];
  return primal == dual && primal == sol.value;
}

}  // namespace redforge
