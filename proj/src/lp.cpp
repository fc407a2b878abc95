#include "scs/lp.hpp"

#include <stdexcept>

namespace scs {
namespace {

// Tableau rows 0..m-1 hold [B^{-1}A | B^{-1}b]; row m holds reduced costs
// z_j = c_B B^{-1}A_j - c_j and the objective value. Bland's rule throughout.
struct Tableau {
  MatrixXq t;  // (m+1) x (cols+1)
  std::vector<int> basis;
  int m, cols;

  void pivot(int row, int col) {
    Rational inv = 1 / t(row, col);
    t.row(row) *= inv;
    for (int r = 0; r <= m; ++r) {
      if (r == row) continue;
      if (t(r, col) != 0) t.row(r) -= t(r, col) * t.row(row);
    }
    basis[row] = col;
  }

  // Returns false on unbounded.
  bool run(const std::vector<bool>& eligible) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (eligible[j] && t(m, j) < 0) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      for (int r = 0; r < m; ++r) {
        if (t(r, enter) <= 0) continue;
        if (leave < 0) { leave = r; continue; }
        Rational lhs = t(r, cols) * t(leave, enter);
        Rational rhs = t(leave, cols) * t(r, enter);
        if (lhs < rhs || (lhs == rhs && basis[r] < basis[leave])) leave = r;
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpProblem::LpProblem(int num_vars) : n_(num_vars), c_(VectorXq::Zero(num_vars)), free_(num_vars, false) {}

void LpProblem::set_objective(VectorXq c) {
  if (c.size() != n_) throw std::invalid_argument("objective dimension mismatch");
  c_ = std::move(c);
}

void LpProblem::mark_free(int var) { free_.at(var) = true; }

void LpProblem::add_le(VectorXq a, Rational b) {
  if (a.size() != n_) throw std::invalid_argument("row dimension mismatch");
  rows_.push_back({std::move(a), std::move(b), 0});
}

void LpProblem::add_ge(VectorXq a, Rational b) { add_le(-a, -b); }

void LpProblem::add_eq(VectorXq a, Rational b) {
  if (a.size() != n_) throw std::invalid_argument("row dimension mismatch");
  rows_.push_back({std::move(a), std::move(b), 1});
}

LpResult LpProblem::minimize() const {
  LpProblem neg(*this);
  neg.c_ = -c_;
  LpResult res = neg.maximize();
  res.objective = -res.objective;
  return res;
}

LpResult LpProblem::maximize() const {
  const int m = static_cast<int>(rows_.size());
  // Standard-form columns: split free vars, then one slack per inequality.
  std::vector<int> pos_col(n_), neg_col(n_, -1);
  int ncols = 0;
  for (int i = 0; i < n_; ++i) {
    pos_col[i] = ncols++;
    if (free_[i]) neg_col[i] = ncols++;
  }
  int slack_base = ncols;
  for (const Row& r : rows_)
    if (r.kind == 0) ++ncols;
  int art_base = ncols;
  int total = ncols + m;  // one artificial per row; unused ones stay basic at 0

  Tableau tab;
  tab.m = m;
  tab.cols = total;
  tab.t = MatrixXq::Zero(m + 1, total + 1);
  tab.basis.resize(m);

  int slack_idx = slack_base;
  for (int r = 0; r < m; ++r) {
    const Row& row = rows_[r];
    int sign = row.b < 0 ? -1 : 1;
    for (int i = 0; i < n_; ++i) {
      tab.t(r, pos_col[i]) = sign * row.a[i];
      if (neg_col[i] >= 0) tab.t(r, neg_col[i]) = -sign * row.a[i];
    }
    if (row.kind == 0) tab.t(r, slack_idx++) = sign;
    tab.t(r, total) = sign * row.b;
    tab.t(r, art_base + r) = 1;
    tab.basis[r] = art_base + r;
  }

  // Phase 1: maximize -sum(artificials).
  for (int j = 0; j < art_base; ++j) {
    Rational s = 0;
    for (int r = 0; r < m; ++r) s -= tab.t(r, j);
    tab.t(m, j) = s;
  }
  Rational rhs = 0;
  for (int r = 0; r < m; ++r) rhs -= tab.t(r, total);
  tab.t(m, total) = rhs;

  std::vector<bool> eligible(total, true);
  if (!tab.run(eligible)) throw std::logic_error("phase-1 simplex unbounded");
  if (tab.t(m, total) != 0) return {LpStatus::Infeasible, 0, VectorXq()};

  // Drive remaining artificials out of the basis or drop their columns.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < art_base) continue;
    int col = -1;
    for (int j = 0; j < art_base; ++j)
      if (tab.t(r, j) != 0) { col = j; break; }
    if (col >= 0) tab.pivot(r, col);
    // else: redundant row; its artificial stays basic at value 0.
  }
  for (int j = art_base; j < total; ++j) eligible[j] = false;

  // Phase 2 objective row: z_j = sum_i c_basis[i] * T(i,j) - c_j.
  VectorXq cost = VectorXq::Zero(total);
  for (int i = 0; i < n_; ++i) {
    cost[pos_col[i]] = c_[i];
    if (neg_col[i] >= 0) cost[neg_col[i]] = -c_[i];
  }
  for (int j = 0; j <= total; ++j) {
    Rational z = (j < total) ? -cost[j] : Rational(0);
    for (int r = 0; r < m; ++r) {
      int b = tab.basis[r];
      if (b < total && cost[b] != 0) z += cost[b] * tab.t(r, j);
    }
    tab.t(m, j) = z;
  }
  if (!tab.run(eligible)) return {LpStatus::Unbounded, 0, VectorXq()};

  VectorXq std_x = VectorXq::Zero(total);
  for (int r = 0; r < m; ++r) std_x[tab.basis[r]] = tab.t(r, total);
  VectorXq x(n_);
  for (int i = 0; i < n_; ++i) {
    x[i] = std_x[pos_col[i]];
    if (neg_col[i] >= 0) x[i] -= std_x[neg_col[i]];
  }
  return {LpStatus::Optimal, tab.t(m, total), std::move(x)};
}

}  // namespace scs
