#pragma once

#include "scs/lp.hpp"
#include "scs/measure.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scs {

enum class Relation { LE, LT, EQ };

/// One linear constraint a.mu (rel) b on measures over Sigma^k.
struct LinearConstraint {
  VectorXq coeffs;  // indexed by pattern
  Relation rel = Relation::LE;
  Rational bound = 0;

  Rational l1_norm() const;
  bool satisfied_by(const VectorXq& mu) const;
};

/// Tolerance function xi(n) for weak admissibility.
class ToleranceFn {
 public:
  static ToleranceFn constant(Rational value);
  /// S(k,m,n) = (2m-2)(m-k)/(n-k+1), the sliding-window slack.
  static ToleranceFn window_slack(int k, int m);

  Rational operator()(long n) const { return eval_(n); }
  const std::string& describe() const { return description_; }

 private:
  std::function<Rational(long)> eval_;
  std::string description_;
};

/// A semiconstrained system: rational linear constraints intersected with the
/// probability simplex on Sigma^k. Always convex; closed iff no strict rows.
class ConstraintSet {
 public:
  ConstraintSet(AlphabetPtr alphabet, int k, std::vector<LinearConstraint> constraints);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int k() const { return k_; }
  int num_patterns() const { return num_patterns_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  bool is_closed() const;

  /// Same region with strict relations replaced by their closures.
  ConstraintSet closure() const;

 private:
  AlphabetPtr alphabet_;
  int k_;
  int num_patterns_;
  std::vector<LinearConstraint> constraints_;
};

bool contains(const ConstraintSet& gamma, const Measure& mu);
bool is_admissible(const ConstraintSet& gamma, const Word& w);
bool is_weakly_admissible(const ConstraintSet& gamma, const Word& w, const ToleranceFn& xi);

/// B_n(Gamma), lexicographically sorted.
std::vector<Word> enumerate_admissible(const ConstraintSet& gamma, int n);
/// |B_n(Gamma)| without materializing the words.
unsigned long long count_admissible(const ConstraintSet& gamma, int n);

/// Gamma_eps: every constraint a.mu <= b tightened to a.mu <= b - eps*|a|_1.
ConstraintSet shrink(const ConstraintSet& gamma, const Rational& eps);
/// Gamma^eps: bounds loosened by eps*|a|_1; strict relations become closed.
ConstraintSet expand(const ConstraintSet& gamma, const Rational& eps);

/// Builds an LP whose first sigma^k variables are a measure constrained to the
/// simplex, optionally to shift invariance, and to the closure of gamma.
LpProblem measure_lp(const ConstraintSet& gamma, bool shift_invariant, int extra_vars = 0);

bool is_feasible(const ConstraintSet& gamma, bool shift_invariant);

/// F(Gamma): patterns whose maximum over the closure of Gamma is zero.
std::set<int> forbidden_set(const ConstraintSet& gamma);

struct FatnessResult {
  bool fat = false;
  Rational margin = 0;  // optimal interior slack t*
  std::optional<Measure> witness;
};

/// Positive interior margin of Gamma within P_si (the shift-invariant slice).
FatnessResult is_fat(const ConstraintSet& gamma);
/// Same margin restricted to the face where forbidden patterns vanish.
FatnessResult is_relatively_fat(const ConstraintSet& gamma);

/// Largest eps (within tol) such that shrink(gamma, eps) is fat, by bisection.
Rational max_admissible_epsilon(const ConstraintSet& gamma, const Rational& tol);

}  // namespace scs
