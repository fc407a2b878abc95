#pragma once

#include "scs/constraints.hpp"

#include <random>

namespace scs::testing {

/// (0,1,0.205)-RLL as a semiconstrained system: mu(11) <= 0.205 over binary
/// pairs.
inline ConstraintSet rll_system() {
  LinearConstraint c;
  c.coeffs = VectorXq::Zero(4);
  c.coeffs[3] = 1;  // pattern 11
  c.rel = Relation::LE;
  c.bound = Rational(205, 1000);
  return ConstraintSet(Alphabet::binary(), 2, {c});
}

/// {mu(000) = 0}: the classical no-three-zeros constraint, k = 3.
inline ConstraintSet no_three_zeros() {
  LinearConstraint c;
  c.coeffs = VectorXq::Zero(8);
  c.coeffs[0] = 1;  // pattern 000
  c.rel = Relation::EQ;
  c.bound = 0;
  return ConstraintSet(Alphabet::binary(), 3, {c});
}

/// {mu in P_si : mu(000), mu(111), mu(101) <= 1/100}, k = 3.
inline ConstraintSet capped_triples() {
  std::vector<LinearConstraint> cs;
  for (int pattern : {0, 7, 5}) {
    LinearConstraint c;
    c.coeffs = VectorXq::Zero(8);
    c.coeffs[pattern] = 1;
    c.rel = Relation::LE;
    c.bound = Rational(1, 100);
    cs.push_back(std::move(c));
  }
  return ConstraintSet(Alphabet::binary(), 3, std::move(cs));
}

/// The convex hull of delta_1111 and (delta_1010 + delta_0101)/2, k = 4:
/// support restricted to {1111, 1010, 0101} with the two cycle halves equal.
inline ConstraintSet two_cycle_hull() {
  std::vector<LinearConstraint> cs;
  for (int pattern = 0; pattern < 16; ++pattern) {
    if (pattern == 15 || pattern == 10 || pattern == 5) continue;
    LinearConstraint c;
    c.coeffs = VectorXq::Zero(16);
    c.coeffs[pattern] = 1;
    c.rel = Relation::EQ;
    c.bound = 0;
    cs.push_back(std::move(c));
  }
  LinearConstraint balance;
  balance.coeffs = VectorXq::Zero(16);
  balance.coeffs[10] = 1;
  balance.coeffs[5] = -1;
  balance.rel = Relation::EQ;
  balance.bound = 0;
  cs.push_back(std::move(balance));
  return ConstraintSet(Alphabet::binary(), 4, std::move(cs));
}

/// {mu(11) = 0}: the golden-mean system.
inline ConstraintSet golden_mean() {
  LinearConstraint c;
  c.coeffs = VectorXq::Zero(4);
  c.coeffs[3] = 1;
  c.rel = Relation::EQ;
  c.bound = 0;
  return ConstraintSet(Alphabet::binary(), 2, {c});
}

/// Unconstrained binary system over k-patterns.
inline ConstraintSet free_system(int k) {
  return ConstraintSet(Alphabet::binary(), k, {});
}

inline std::vector<uint8_t> random_bits(std::mt19937_64& rng, size_t n) {
  std::vector<uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<uint8_t>(rng() & 1);
  return bits;
}

}  // namespace scs::testing
