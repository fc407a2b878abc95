#include "helpers.hpp"
#include "scs/capacity.hpp"

#include <doctest.h>

#include <cmath>

using namespace scs;
using namespace scs::testing;

TEST_CASE("entropy identities on simple measures") {
  auto binary = Alphabet::binary();
  Measure u = Measure::uniform(binary, 2);
  CHECK(conditional_entropy(u) == doctest::Approx(1.0));
  CHECK(relative_entropy_term(u) == doctest::Approx(0.0));
  Measure d = Measure::dirac(Word::parse(binary, "00"));
  CHECK(conditional_entropy(d) == doctest::Approx(0.0));
}

TEST_CASE("free system has capacity one") {
  CapacityResult r = capacity_scs(free_system(2));
  REQUIRE(r.feasible);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  REQUIRE(r.optimizer.has_value());
  CHECK(r.optimizer->is_shift_invariant());
}

TEST_CASE("golden mean capacity matches the classical value") {
  CapacityResult r = capacity_scs(golden_mean());
  REQUIRE(r.feasible);
  CHECK(r.value == doctest::Approx(std::log2((1 + std::sqrt(5.0)) / 2)).epsilon(1e-6));
}

TEST_CASE("infeasible systems are reported") {
  LinearConstraint c;
  c.coeffs = VectorXq::Ones(4);
  c.rel = Relation::LE;
  c.bound = Rational(1, 2);
  CapacityResult r = capacity_scs(ConstraintSet(Alphabet::binary(), 2, {c}));
  CHECK(!r.feasible);
}

TEST_CASE("optimizer lies in the constraint set") {
  ConstraintSet rll = rll_system();
  CapacityResult r = capacity_scs(rll);
  REQUIRE(r.feasible);
  REQUIRE(r.optimizer.has_value());
  CHECK(contains(rll.closure(), *r.optimizer));
  CHECK(r.optimizer->is_shift_invariant());
  CHECK(r.duality_gap_estimate <= 1e-9);
}

TEST_CASE("capacity bounds bracket the closed capacity") {
  CapacityBounds b = capacity_bounds(rll_system());
  REQUIRE(b.upper_finite);
  REQUIRE(b.lower_finite);
  CHECK(b.lower <= b.upper + 1e-9);
  CHECK(b.upper == doctest::Approx(0.98).epsilon(0.01));
}

TEST_CASE("brute force growth matches the free count") {
  auto samples = capacity_bruteforce(free_system(2), 8);
  for (const auto& s : samples) {
    CHECK(!s.empty);
    CHECK(s.count == (1ull << s.n));
    CHECK(s.rate == doctest::Approx(1.0));
  }
}

TEST_CASE("graph capacity of classic graphs") {
  auto binary = Alphabet::binary();
  double bits = 0;
  REQUIRE(graph_capacity(debruijn(binary, 1), &bits));
  CHECK(bits == 1.0);  // snapped exactly
  REQUIRE(graph_capacity(debruijn(binary, 3), &bits));
  CHECK(bits == 1.0);

  LabeledDigraph gm(binary, 1);
  int s0 = gm.add_vertex("0"), s1 = gm.add_vertex("1");
  gm.add_edge(s0, s0, Word::parse(binary, "0"));
  gm.add_edge(s0, s1, Word::parse(binary, "1"));
  gm.add_edge(s1, s0, Word::parse(binary, "0"));
  REQUIRE(graph_capacity(gm, &bits));
  CHECK(bits == doctest::Approx(std::log2((1 + std::sqrt(5.0)) / 2)).epsilon(1e-10));

  LabeledDigraph cyc(binary, 1);
  int a = cyc.add_vertex("a"), b = cyc.add_vertex("b");
  cyc.add_edge(a, b, Word::parse(binary, "0"));
  cyc.add_edge(b, a, Word::parse(binary, "1"));
  REQUIRE(graph_capacity(cyc, &bits));
  CHECK(bits == 0.0);  // simple cycle, periodic

  LabeledDigraph acyclic(binary, 1);
  int x = acyclic.add_vertex("x"), y = acyclic.add_vertex("y");
  acyclic.add_edge(x, y, Word::parse(binary, "0"));
  CHECK(!graph_capacity(acyclic, &bits));
}
