#pragma once

#include "scs/capacity.hpp"
#include "scs/constraints.hpp"
#include "scs/graphs.hpp"

#include <string>
#include <vector>

namespace scs {

/// G_ess(Gamma): vertices are (k-1)-words, one edge per pattern that some
/// measure of the essential part puts positive mass on; every edge stores
/// such a witness.
struct EssentialGraph {
  AlphabetPtr alphabet;
  int k = 0;
  /// Isolated vertices removed; edges labeled by the pattern's first symbol.
  LabeledDigraph graph;
  std::vector<int> edge_pattern;   // aligned with graph.edges()
  std::vector<Measure> witnesses;  // aligned with graph.edges()

  EssentialGraph() : graph(nullptr, 1, LabelKind::FirstSymbol) {}

  bool has_pattern(int pattern) const;
  const Measure& witness_for(int pattern) const;
};

/// Support-enumeration construction: each candidate support S whose pattern
/// graph is strongly connected (after isolated-vertex removal) is tested by
/// the exact margin LP {eta in Gamma cap P_si, eta = 0 off S, eta >= t on S,
/// max t}; S contributes its edges iff t* > 0.
/// Refuses alphabets with more than pattern_budget patterns.
EssentialGraph essential_graph(const ConstraintSet& gamma, int pattern_budget = 16);

/// cap-containing: log2 Perron value of G_ess; 0 when the graph is a union
/// of simple cycles (or empty).
double containing_capacity(const ConstraintSet& gamma);

/// A word beta such that alpha beta is admissible in Gamma, built by Eulerian
/// completion of a scaled measure graph of a witness mixture along alpha's
/// edge path. Rejects prefixes outside the language of G_ess.
Word prefix_completion(const ConstraintSet& gamma, const Word& alpha);

/// Lemma-7 style check: every admissible sample's windows are all edges of
/// G_ess.
bool admissible_words_in_ess(const ConstraintSet& gamma, const std::vector<Word>& samples);

struct ZeroCapacityReport {
  bool capB_zero = false;     // cap(B(Gamma)) = 0, from the optimizer
  bool cap_sup_zero = false;  // cap-containing = 0, from the cycle structure
  /// When cap_sup_zero: the disjoint simple cycles, as vertex-name loops.
  std::vector<std::vector<std::string>> cycles;
};

/// Both sides of the zero-capacity equivalence, decided independently.
ZeroCapacityReport zero_capacity_equiv(const ConstraintSet& gamma);

/// Graphviz text with per-edge pattern and witness-mass annotations.
std::string essential_dot(const EssentialGraph& g);

}  // namespace scs
