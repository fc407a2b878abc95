#include "helpers.hpp"
#include "scs/constraints.hpp"

#include <doctest.h>

#include <set>

using namespace scs;
using namespace scs::testing;

TEST_CASE("admissibility matches the empirical frequency") {
  ConstraintSet rll = rll_system();
  auto binary = rll.alphabet();
  CHECK(is_admissible(rll, Word::parse(binary, "0101010101")));
  // fr(11) = 1/9 <= 0.205
  CHECK(is_admissible(rll, Word::parse(binary, "0110010010")));
  // fr(11) = 4/9 > 0.205
  CHECK(!is_admissible(rll, Word::parse(binary, "0111110010")));
}

TEST_CASE("enumerate and count agree and are lexicographic") {
  ConstraintSet rll = rll_system();
  for (int n = 2; n <= 12; ++n) {
    auto words = enumerate_admissible(rll, n);
    CHECK(words.size() == count_admissible(rll, n));
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const auto& w : words) CHECK(is_admissible(rll, w));
  }
}

TEST_CASE("golden mean counts follow the Fibonacci recursion") {
  ConstraintSet gm = golden_mean();
  unsigned long long a = count_admissible(gm, 2), b = count_admissible(gm, 3);
  CHECK(a == 3);
  CHECK(b == 5);
  for (int n = 4; n <= 16; ++n) {
    unsigned long long c = count_admissible(gm, n);
    CHECK(c == a + b);
    a = b;
    b = c;
  }
}

TEST_CASE("shrink tightens by the l1 norm and expand closes strict rows") {
  ConstraintSet rll = rll_system();
  ConstraintSet tight = shrink(rll, Rational(1, 200));
  CHECK(tight.constraints()[0].bound == Rational(1, 5));  // 0.205 - 0.005 * 1
  ConstraintSet loose = expand(rll, Rational(1, 200));
  CHECK(loose.constraints()[0].bound == Rational(21, 100));
  CHECK(loose.is_closed());
  ConstraintSet same = shrink(rll, 0);
  CHECK(same.constraints()[0].bound == rll.constraints()[0].bound);
}

TEST_CASE("forbidden set of the no-three-zeros system") {
  auto f = forbidden_set(no_three_zeros());
  CHECK(f == std::set<int>{0});
  CHECK(forbidden_set(rll_system()).empty());
}

TEST_CASE("fatness of the RLL system with a valid interior witness") {
  FatnessResult r = is_fat(rll_system());
  CHECK(r.fat);
  CHECK(r.margin > 0);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->is_shift_invariant());
  CHECK(contains(rll_system(), *r.witness));
  for (int i = 0; i < 4; ++i) CHECK((*r.witness)[i] > 0);
}

TEST_CASE("the two-cycle hull is relatively fat but not fat") {
  ConstraintSet hull = two_cycle_hull();
  CHECK(!is_fat(hull).fat);
  FatnessResult rf = is_relatively_fat(hull);
  CHECK(rf.fat);
  REQUIRE(rf.witness.has_value());
  CHECK((*rf.witness)[15] > 0);
  CHECK((*rf.witness)[10] > 0);
  CHECK((*rf.witness)[5] > 0);
}

TEST_CASE("equality systems are not fat") {
  CHECK(!is_fat(golden_mean()).fat);
  CHECK(is_relatively_fat(golden_mean()).fat);
}

TEST_CASE("max admissible epsilon is positive for fat systems") {
  Rational eps = max_admissible_epsilon(rll_system(), Rational(1, 1000));
  CHECK(eps > 0);
  CHECK(eps < Rational(41, 200));
  CHECK(is_fat(shrink(rll_system(), eps / 2)).fat);
}

TEST_CASE("tolerance functions") {
  ToleranceFn fn = ToleranceFn::window_slack(2, 6);
  CHECK(fn(100) == Rational(40, 99));
  ToleranceFn c = ToleranceFn::constant(Rational(1, 10));
  CHECK(c(7) == Rational(1, 10));
}

TEST_CASE("weak admissibility loosens by xi") {
  ConstraintSet rll = rll_system();
  auto binary = rll.alphabet();
  Word w = Word::parse(binary, "1101101101");  // fr(11) = 3/9 > 0.205
  CHECK(!is_admissible(rll, w));
  CHECK(is_weakly_admissible(rll, w, ToleranceFn::constant(Rational(1, 2))));
  CHECK(!is_weakly_admissible(rll, w, ToleranceFn::constant(Rational(1, 100))));
}

TEST_CASE("prefix and suffix sets of B_n coincide") {
  ConstraintSet rll = rll_system();
  auto words = enumerate_admissible(rll, 10);
  std::set<std::vector<uint8_t>> prefixes, suffixes;
  for (const auto& w : words) {
    prefixes.insert(w.subword(0, 4).symbols());
    suffixes.insert(w.subword(6, 4).symbols());
  }
  CHECK(prefixes == suffixes);
}

TEST_CASE("measure LP feasibility") {
  CHECK(is_feasible(rll_system(), true));
  CHECK(is_feasible(golden_mean(), true));
  LinearConstraint c;
  c.coeffs = VectorXq::Ones(4);
  c.rel = Relation::LE;
  c.bound = Rational(1, 2);  // total mass <= 1/2 contradicts the simplex
  ConstraintSet empty(Alphabet::binary(), 2, {c});
  CHECK(!is_feasible(empty, false));
}
