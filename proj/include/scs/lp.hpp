#pragma once

#include "scs/rational.hpp"

#include <vector>

namespace scs {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective = 0;
  VectorXq x;  // a vertex solution when Optimal
};

/// Exact rational linear program: maximize c.x subject to inequality and
/// equality rows; variables are nonnegative unless marked free.
/// Solved by two-phase dense simplex with Bland's rule.
class LpProblem {
 public:
  explicit LpProblem(int num_vars);

  int num_vars() const { return n_; }
  void set_objective(VectorXq c);
  void mark_free(int var);
  void add_le(VectorXq a, Rational b);
  void add_ge(VectorXq a, Rational b);
  void add_eq(VectorXq a, Rational b);

  LpResult maximize() const;
  LpResult minimize() const;

 private:
  struct Row {
    VectorXq a;
    Rational b;
    int kind;  // 0 = le, 1 = eq
  };
  int n_;
  VectorXq c_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

}  // namespace scs
