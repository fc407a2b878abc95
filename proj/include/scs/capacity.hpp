#pragma once

#include "scs/constraints.hpp"
#include "scs/graphs.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace scs {

struct CapacityResult {
  bool feasible = false;  // Gamma intersect P_si nonempty
  double value = 0;       // bits/symbol; meaningful only when feasible
  std::optional<Measure> optimizer;
  long iterations = 0;
  double duality_gap_estimate = 0;
};

/// H(eta|eta') in bits, eta'(phi a) = sum_a' eta(phi a')/sigma.
double relative_entropy_term(const Measure& eta);

/// log2(sigma) - H(eta|eta'): the conditional entropy of the last symbol
/// given the first k-1 under eta. This is the capacity objective.
double conditional_entropy(const Measure& eta);

struct CapacityOptions {
  double gap_tolerance = 1e-9;  // bits
  long max_iterations = 2'000'000;
};

/// cap(B(Gamma)) for closed convex Gamma: maximize the conditional entropy
/// over Gamma intersect P_si by away-step Frank-Wolfe with an exact-rational
/// LP as the linear oracle.
CapacityResult capacity_scs(const ConstraintSet& gamma, const CapacityOptions& opts = {});

struct CapacityBounds {
  bool lower_finite = false;
  double lower = 0;
  bool upper_finite = false;
  double upper = 0;
};

/// Interior/closure capacity bounds: the upper bound optimizes over the
/// closure, the lower over a shrinking strict-interior sample.
CapacityBounds capacity_bounds(const ConstraintSet& gamma);

struct GrowthSample {
  int n;
  unsigned long long count;
  bool empty;
  double rate;  // log2(count)/n when nonempty
};

/// Exact (1/n) log2 |B_n(Gamma)| for n = k..n_max, by enumeration.
std::vector<GrowthSample> capacity_bruteforce(const ConstraintSet& gamma, int n_max);

/// log2 of the Perron eigenvalue of the recurrent part, by power iteration
/// (Collatz-Wielandt bracket, shifted to kill periodicity). Returns false
/// when the graph has no cycle.
bool graph_capacity(const LabeledDigraph& g, double* bits);
double graph_capacity_or_throw(const LabeledDigraph& g);

}  // namespace scs
