#include "scs/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace scs {

LabeledDigraph::LabeledDigraph(AlphabetPtr alphabet, int label_length, LabelKind kind)
    : alphabet_(std::move(alphabet)), label_length_(label_length), kind_(kind) {
  if (label_length_ < 1) throw std::invalid_argument("label length must be >= 1");
}

int LabeledDigraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  out_.emplace_back();
  return num_vertices() - 1;
}

void LabeledDigraph::add_edge(int src, int dst, Word label) {
  if (src < 0 || src >= num_vertices() || dst < 0 || dst >= num_vertices())
    throw std::out_of_range("edge endpoint");
  if (label.size() != label_length_) throw std::invalid_argument("label length mismatch");
  out_[src].push_back(num_edges());
  edges_.push_back({src, dst, std::move(label)});
}

LabeledDigraph LabeledDigraph::induced(const std::vector<int>& vertices) const {
  LabeledDigraph g(alphabet_, label_length_, kind_);
  std::vector<int> remap(num_vertices(), -1);
  for (int v : vertices) remap[v] = g.add_vertex(names_[v]);
  for (const Edge& e : edges_)
    if (remap[e.src] >= 0 && remap[e.dst] >= 0) g.add_edge(remap[e.src], remap[e.dst], e.label);
  return g;
}

LabeledDigraph debruijn(const AlphabetPtr& alphabet, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  LabeledDigraph g(alphabet, 1, LabelKind::LastSymbol);
  int sigma = alphabet->size();
  long n = 1;
  for (int i = 0; i < order; ++i) n *= sigma;
  for (long v = 0; v < n; ++v)
    g.add_vertex(index_to_pattern(alphabet, static_cast<int>(v), order).str());
  for (long v = 0; v < n; ++v)
    for (int a = 0; a < sigma; ++a) {
      long dst = (v % (n / sigma)) * sigma + a;
      g.add_edge(static_cast<int>(v), static_cast<int>(dst),
                 Word(alphabet, {static_cast<uint8_t>(a)}));
    }
  return g;
}

std::vector<std::vector<int>> strongly_connected_components(const LabeledDigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  // Iterative Tarjan.
  struct Frame {
    int v;
    size_t edge_pos;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& outs = g.out_edges(f.v);
      if (f.edge_pos < outs.size()) {
        int w = g.edges()[outs[f.edge_pos++]].dst;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> component;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = static_cast<int>(components.size());
            component.push_back(w);
          } while (w != f.v);
          std::sort(component.begin(), component.end());
          components.push_back(std::move(component));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return components;
}

bool language_member(const LabeledDigraph& g, const Word& w) {
  const int q = g.label_length();
  if (w.size() % q != 0) return false;
  std::vector<bool> current(g.num_vertices(), true);
  for (int pos = 0; pos < w.size(); pos += q) {
    Word block = w.subword(pos, q);
    std::vector<bool> next(g.num_vertices(), false);
    bool any = false;
    for (const auto& e : g.edges()) {
      if (current[e.src] && e.label == block) {
        next[e.dst] = true;
        any = true;
      }
    }
    if (!any) return false;
    current = std::move(next);
  }
  return true;
}

bool is_definite(const LabeledDigraph& g, int m, int a) {
  const int n = g.num_vertices();
  auto pair_id = [n](int u, int v) { return u * n + v; };
  // Pairs reachable by equal-label paths of length m (from arbitrary starts).
  std::vector<bool> reach(n * n, false);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) reach[pair_id(u, v)] = true;
  for (int step = 0; step < m; ++step) {
    std::vector<bool> next(n * n, false);
    for (const auto& e1 : g.edges())
      for (const auto& e2 : g.edges())
        if (e1.label == e2.label && reach[pair_id(e1.src, e2.src)])
          next[pair_id(e1.dst, e2.dst)] = true;
    reach = std::move(next);
  }
  // Pairs admitting equal-label continuations of length a.
  std::vector<bool> cont(n * n, true);
  for (int step = 0; step < a; ++step) {
    std::vector<bool> prev(n * n, false);
    for (const auto& e1 : g.edges())
      for (const auto& e2 : g.edges())
        if (e1.label == e2.label && cont[pair_id(e1.dst, e2.dst)])
          prev[pair_id(e1.src, e2.src)] = true;
    cont = std::move(prev);
  }
  // A violation is two distinct equal-label edges at index m.
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = 0; j < edges.size(); ++j) {
      if (i == j) continue;
      const auto& e1 = edges[i];
      const auto& e2 = edges[j];
      if (e1.label == e2.label && reach[pair_id(e1.src, e2.src)] &&
          cont[pair_id(e1.dst, e2.dst)])
        return false;
    }
  return true;
}

std::string to_dot(const LabeledDigraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    os << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
  for (const auto& e : g.edges())
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

MultiDigraph::MultiDigraph(AlphabetPtr alphabet, int k, std::vector<BigInt> multiplicities)
    : alphabet_(std::move(alphabet)), k_(k), mult_(std::move(multiplicities)) {
  if (k_ < 2) throw std::invalid_argument("measure multigraph needs k >= 2");
  long n = 1;
  for (int i = 0; i < k_ - 1; ++i) n *= alphabet_->size();
  num_vertices_ = static_cast<int>(n);
  if (static_cast<long>(mult_.size()) != n * alphabet_->size())
    throw std::invalid_argument("multiplicity vector dimension mismatch");
  for (const BigInt& m : mult_)
    if (m < 0) throw std::invalid_argument("negative multiplicity");
}

BigInt MultiDigraph::out_degree(int v) const {
  BigInt d = 0;
  for (int a = 0; a < sigma(); ++a) d += mult_[v * sigma() + a];
  return d;
}

BigInt MultiDigraph::in_degree(int v) const {
  BigInt d = 0;
  for (int a = 0; a < sigma(); ++a) d += mult_[a * num_vertices_ + v];
  return d;
}

BigInt MultiDigraph::total_edges() const {
  BigInt t = 0;
  for (const BigInt& m : mult_) t += m;
  return t;
}

bool MultiDigraph::support_strongly_connected() const {
  std::vector<int> live;
  for (int v = 0; v < num_vertices_; ++v)
    if (!is_isolated(v)) live.push_back(v);
  if (live.empty()) return false;
  auto reach = [&](bool reverse) {
    std::vector<bool> seen(num_vertices_, false);
    std::vector<int> stack{live[0]};
    seen[live[0]] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int p = 0; p < static_cast<int>(mult_.size()); ++p) {
        if (mult_[p] == 0) continue;
        int s = edge_src(p), d = edge_dst(p);
        if (reverse) std::swap(s, d);
        if (s == v && !seen[d]) {
          seen[d] = true;
          stack.push_back(d);
        }
      }
    }
    for (int v : live)
      if (!seen[v]) return false;
    return true;
  };
  return reach(false) && reach(true);
}

MultiDigraph measure_graph(const Measure& eta, const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("multiplier must be positive");
  BigInt m = eta.common_denominator();
  std::vector<BigInt> mult(eta.num_patterns());
  for (int p = 0; p < eta.num_patterns(); ++p) {
    Rational v = eta[p] * Rational(n * m, 1);
    mult[p] = boost::multiprecision::numerator(v);
  }
  return MultiDigraph(eta.alphabet(), eta.k(), std::move(mult));
}

bool has_word(const Measure& eta) {
  if (!eta.is_shift_invariant()) return false;
  return measure_graph(eta, 1).support_strongly_connected();
}

namespace {

long long to_edge_count(const BigInt& v) {
  if (v > BigInt(50'000'000)) throw std::invalid_argument("measure graph too large to traverse");
  return v.convert_to<long long>();
}

}  // namespace

std::vector<int> eulerian_cycle(const MultiDigraph& g, int start_vertex,
                                const std::vector<int>& forced_prefix) {
  const int sigma = g.sigma();
  const int nv = g.num_prefix_vertices();
  std::vector<long long> remaining(g.multiplicities().size());
  for (size_t p = 0; p < remaining.size(); ++p) remaining[p] = to_edge_count(g.multiplicity(static_cast<int>(p)));

  int walk_start = start_vertex;
  for (size_t i = 0; i < forced_prefix.size(); ++i) {
    int p = forced_prefix[i];
    int expect = (i == 0) ? start_vertex : g.edge_dst(forced_prefix[i - 1]);
    if (g.edge_src(p) != expect)
      throw std::invalid_argument("forced prefix is not a contiguous path");
    if (remaining[p] == 0)
      throw std::invalid_argument("forced prefix exceeds edge multiplicity");
    --remaining[p];
  }
  if (!forced_prefix.empty()) walk_start = g.edge_dst(forced_prefix.back());

  // Balance audit: all zero (cycle), or +1 out-surplus at walk_start and +1
  // in-surplus at the prefix start (path case).
  for (int v = 0; v < nv; ++v) {
    long long out = 0, in = 0;
    for (int a = 0; a < sigma; ++a) {
      out += remaining[v * sigma + a];
      in += remaining[a * nv + v];
    }
    long long expected = 0;
    if (!forced_prefix.empty() && walk_start != start_vertex) {
      if (v == walk_start) expected = 1;
      if (v == start_vertex) expected = -1;
    }
    if (out - in != expected)
      throw std::invalid_argument("Eulerian balance fails at vertex " +
                                  index_to_pattern(g.alphabet(), v, g.k() - 1).str());
  }

  std::vector<int> next_symbol(nv, 0);
  std::vector<std::pair<int, int>> stack{{walk_start, -1}};  // (vertex, via pattern)
  std::vector<int> route_rev;
  while (!stack.empty()) {
    auto& [v, via] = stack.back();
    int chosen = -1;
    while (next_symbol[v] < sigma) {
      int p = v * sigma + next_symbol[v];
      if (remaining[p] > 0) {
        chosen = p;
        break;
      }
      ++next_symbol[v];
    }
    if (chosen >= 0) {
      --remaining[chosen];
      stack.push_back({g.edge_dst(chosen), chosen});
    } else {
      if (via >= 0) route_rev.push_back(via);
      stack.pop_back();
    }
  }
  for (size_t p = 0; p < remaining.size(); ++p)
    if (remaining[p] > 0)
      throw std::invalid_argument(
          "graph not connected: unreachable edges at vertex " +
          index_to_pattern(g.alphabet(), g.edge_src(static_cast<int>(p)), g.k() - 1).str());

  std::vector<int> route(forced_prefix);
  route.insert(route.end(), route_rev.rbegin(), route_rev.rend());
  return route;
}

Word word_from_route(const AlphabetPtr& alphabet, int k, int start_vertex,
                     const std::vector<int>& route) {
  Word prefix = index_to_pattern(alphabet, start_vertex, k - 1);
  std::vector<uint8_t> symbols = prefix.symbols();
  int sigma = alphabet->size();
  for (int p : route) symbols.push_back(static_cast<uint8_t>(p % sigma));
  return Word(alphabet, std::move(symbols));
}

Word word_from_measure(const Measure& eta, const BigInt& n) {
  if (!has_word(eta)) throw std::invalid_argument("measure admits no word");
  MultiDigraph g = measure_graph(eta, n);
  int start = -1;
  for (int v = 0; v < g.num_prefix_vertices() && start < 0; ++v)
    if (!g.is_isolated(v)) start = v;
  std::vector<int> route = eulerian_cycle(g, start);
  return word_from_route(eta.alphabet(), eta.k(), start, route);
}

}  // namespace scs
