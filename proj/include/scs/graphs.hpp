#pragma once

#include "scs/measure.hpp"
#include "scs/rational.hpp"
#include "scs/words.hpp"

#include <string>
#include <vector>

namespace scs {

/// Which symbol of the underlying pattern an edge label carries. De Bruijn
/// presentations label by the incoming (last) symbol; the essential graph
/// labels by the first symbol.
enum class LabelKind { LastSymbol, FirstSymbol };

/// Finite directed labeled graph; labels are words of uniform length q >= 1.
class LabeledDigraph {
 public:
  struct Edge {
    int src = 0, dst = 0;
    Word label;
  };

  LabeledDigraph(AlphabetPtr alphabet, int label_length, LabelKind kind = LabelKind::LastSymbol);

  int add_vertex(std::string name);
  void add_edge(int src, int dst, Word label);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int v) const { return out_.at(v); }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  int label_length() const { return label_length_; }
  LabelKind label_kind() const { return kind_; }

  /// Vertex-induced subgraph; keeps relative order of vertices and edges.
  LabeledDigraph induced(const std::vector<int>& vertices) const;

 private:
  AlphabetPtr alphabet_;
  int label_length_;
  LabelKind kind_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

/// Full De Bruijn graph: vertices Sigma^order, edge u -> shift(u,a) labeled a.
LabeledDigraph debruijn(const AlphabetPtr& alphabet, int order);

/// Tarjan SCC partition; component ids are in reverse topological order.
std::vector<std::vector<int>> strongly_connected_components(const LabeledDigraph& g);

/// Subset walk; w's length must be a multiple of the label length.
bool language_member(const LabeledDigraph& g, const Word& w);

/// (m,a)-definiteness: all equal-label paths of length m+a+1 agree on the
/// edge at index m. Exhaustive pair search.
bool is_definite(const LabeledDigraph& g, int m, int a);

/// Graphviz text with deterministic ordering.
std::string to_dot(const LabeledDigraph& g);

/// Multigraph on Sigma^(k-1) with one parallel-edge bundle per k-pattern.
/// Houses the measure graphs nG_eta.
class MultiDigraph {
 public:
  MultiDigraph(AlphabetPtr alphabet, int k, std::vector<BigInt> multiplicities);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int k() const { return k_; }
  int num_prefix_vertices() const { return num_vertices_; }
  const std::vector<BigInt>& multiplicities() const { return mult_; }
  BigInt multiplicity(int pattern) const { return mult_.at(pattern); }

  int edge_src(int pattern) const { return pattern / sigma(); }
  int edge_dst(int pattern) const { return pattern % num_vertices_; }
  int sigma() const { return alphabet_->size(); }

  BigInt out_degree(int v) const;
  BigInt in_degree(int v) const;
  bool is_isolated(int v) const { return out_degree(v) == 0 && in_degree(v) == 0; }
  /// Strong connectivity of the support after isolated-vertex removal.
  bool support_strongly_connected() const;
  BigInt total_edges() const;

 private:
  AlphabetPtr alphabet_;
  int k_;
  int num_vertices_;
  std::vector<BigInt> mult_;  // by pattern index
};

/// nG_eta: nM*eta(phi) parallel edges per pattern phi, M the least common
/// denominator of eta.
MultiDigraph measure_graph(const Measure& eta, const BigInt& n);

/// True iff eta admits a word with that exact frequency (measure graph
/// strongly connected after isolated-vertex removal).
bool has_word(const Measure& eta);

/// Eulerian route as a pattern (edge) sequence; uses each edge exactly per
/// multiplicity. If forced_prefix is nonempty the route begins with it.
/// Accepts the balanced cycle case and the +1/-1 Eulerian path case left by
/// removing the forced prefix.
std::vector<int> eulerian_cycle(const MultiDigraph& g, int start_vertex,
                                const std::vector<int>& forced_prefix = {});

/// Sliding-window reading of an Eulerian route: |route| + k - 1 symbols.
Word word_from_route(const AlphabetPtr& alphabet, int k, int start_vertex,
                     const std::vector<int>& route);

/// A word omega with fr_omega^k = eta exactly, from an Eulerian cycle of
/// measure_graph(eta, n).
Word word_from_measure(const Measure& eta, const BigInt& n);

}  // namespace scs
