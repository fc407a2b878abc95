#include "scs/lp.hpp"

#include <doctest.h>

using namespace scs;

TEST_CASE("simple maximization hits a vertex") {
  LpProblem lp(2);
  VectorXq c(2);
  c << 3, 2;
  lp.set_objective(c);
  VectorXq a(2);
  a << 1, 1;
  lp.add_le(a, 4);
  a << 1, 0;
  lp.add_le(a, 2);
  LpResult r = lp.maximize();
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == 10);  // x = (2, 2)
  CHECK(r.x[0] == 2);
  CHECK(r.x[1] == 2);
}

TEST_CASE("infeasible and unbounded statuses") {
  LpProblem lp(1);
  VectorXq a(1);
  a << 1;
  lp.add_le(a, -1);
  lp.set_objective(a);
  CHECK(lp.maximize().status == LpStatus::Infeasible);

  LpProblem lp2(1);
  lp2.set_objective(a);
  CHECK(lp2.maximize().status == LpStatus::Unbounded);
}

TEST_CASE("equalities, free variables, minimization") {
  LpProblem lp(2);
  lp.mark_free(1);
  VectorXq a(2);
  a << 1, 1;
  lp.add_eq(a, 3);
  VectorXq c(2);
  c << 0, 1;
  lp.set_objective(c);
  // y free: minimize y with x >= 0 and x + y = 3 -> y can go to -inf.
  CHECK(lp.minimize().status == LpStatus::Unbounded);
  a << 1, 0;
  lp.add_le(a, 5);
  LpResult r = lp.minimize();
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == -2);  // x = 5, y = -2
}

TEST_CASE("exact rationals survive degenerate pivots") {
  LpProblem lp(3);
  VectorXq a(3);
  a << Rational(1, 3), Rational(1, 6), Rational(1, 2);
  lp.add_eq(a, 1);
  a << 1, 1, 1;
  lp.add_le(a, 4);
  VectorXq c(3);
  c << Rational(1, 2), 1, Rational(3, 4);
  lp.set_objective(c);
  LpResult r = lp.maximize();
  REQUIRE(r.status == LpStatus::Optimal);
  // x2 = 6 violates the cap, optimum mixes x1 (cheap in the equality) and cap.
  Rational expect = r.x.dot(c);
  CHECK(r.objective == expect);
  CHECK(a.dot(r.x) <= 4);
}

TEST_CASE("redundant equality rows are tolerated") {
  LpProblem lp(2);
  VectorXq a(2);
  a << 1, 1;
  lp.add_eq(a, 1);
  lp.add_eq(a, 1);  // duplicate
  VectorXq c(2);
  c << 1, 0;
  lp.set_objective(c);
  LpResult r = lp.maximize();
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == 1);
}
