#include "scs/essential.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace scs {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// Margin LP for one support: eta in Gamma cap P_si, zero off S, at least t
/// on S (strict rows get the same margin). Returns the witness when t* > 0.
std::optional<Measure> support_witness(const ConstraintSet& gamma, uint32_t mask) {
  const int n = gamma.num_patterns();
  const int sigma = gamma.alphabet()->size();
  const int nv = n / sigma;
  const int t = n;  // margin variable index
  LpProblem lp(n + 1);
  lp.add_eq(VectorXq::Ones(n + 1) - VectorXq::Unit(n + 1, t), Rational(1));
  for (int v = 0; v < nv; ++v) {
    VectorXq row = VectorXq::Zero(n + 1);
    for (int a = 0; a < sigma; ++a) row[v * sigma + a] += 1;  // left marginal
    for (int p = 0; p < n; ++p)
      if (p % nv == v) row[p] -= 1;  // right marginal
    lp.add_eq(std::move(row), Rational(0));
  }
  for (const auto& c : gamma.constraints()) {
    VectorXq row = VectorXq::Zero(n + 1);
    row.head(n) = c.coeffs;
    if (c.rel == Relation::EQ) {
      lp.add_eq(std::move(row), c.bound);
    } else {
      if (c.rel == Relation::LT) row[t] = 1;  // strictness via the margin
      lp.add_le(std::move(row), c.bound);
    }
  }
  for (int i = 0; i < n; ++i) {
    VectorXq row = VectorXq::Zero(n + 1);
    row[i] = 1;
    if (mask & (1u << i)) {
      row[t] = -1;
      lp.add_ge(std::move(row), Rational(0));  // eta(i) >= t
    } else {
      lp.add_eq(std::move(row), Rational(0));
    }
  }
  lp.set_objective(VectorXq::Unit(n + 1, t));
  LpResult r = lp.maximize();
  if (r.status != LpStatus::Optimal || r.objective <= 0) return std::nullopt;
  VectorXq values = r.x.head(n);
  return Measure(gamma.alphabet(), gamma.k(), std::move(values));
}

bool support_strongly_connected_mask(const AlphabetPtr& alphabet, int k, uint32_t mask) {
  int patterns = 1;
  for (int i = 0; i < k; ++i) patterns *= alphabet->size();
  std::vector<BigInt> m(patterns, 0);
  for (int p = 0; p < patterns; ++p)
    if (mask & (1u << p)) m[p] = 1;
  return MultiDigraph(alphabet, k, std::move(m)).support_strongly_connected();
}

}  // namespace

bool EssentialGraph::has_pattern(int pattern) const {
  return std::find(edge_pattern.begin(), edge_pattern.end(), pattern) != edge_pattern.end();
}

const Measure& EssentialGraph::witness_for(int pattern) const {
  for (size_t i = 0; i < edge_pattern.size(); ++i)
    if (edge_pattern[i] == pattern) return witnesses[i];
  throw std::out_of_range("pattern is not an edge of the essential graph");
}

EssentialGraph essential_graph(const ConstraintSet& gamma, int pattern_budget) {
  const int n = gamma.num_patterns();
  if (n > pattern_budget) {
    std::ostringstream msg;
    msg << "support enumeration over " << n << " patterns exceeds the budget of "
        << pattern_budget;
    throw std::invalid_argument(msg.str());
  }
  const int sigma = gamma.alphabet()->size();
  const int nv = n / sigma;
  const int k = gamma.k();

  // Masks in decreasing popcount order, so the full support (the fat case)
  // resolves everything in one LP.
  std::vector<uint32_t> masks;
  masks.reserve((size_t(1) << n) - 1);
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });

  std::map<int, Measure> witness_by_pattern;
  uint32_t covered = 0;
  for (uint32_t mask : masks) {
    if ((mask & ~covered) == 0) continue;  // adds no new edge
    if (!support_strongly_connected_mask(gamma.alphabet(), k, mask)) continue;
    std::optional<Measure> w = support_witness(gamma, mask);
    if (!w) continue;
    for (int p = 0; p < n; ++p)
      if ((mask & (1u << p)) && !witness_by_pattern.count(p)) witness_by_pattern.emplace(p, *w);
    covered |= mask;
    if (covered == (uint32_t(1) << n) - 1) break;
  }

  EssentialGraph out;
  out.alphabet = gamma.alphabet();
  out.k = k;
  std::vector<bool> used(nv, false);
  for (const auto& [p, w] : witness_by_pattern) {
    used[p / sigma] = true;
    used[p % nv] = true;
  }
  LabeledDigraph g(gamma.alphabet(), 1, LabelKind::FirstSymbol);
  std::vector<int> vid(nv, -1);
  for (int v = 0; v < nv; ++v)
    if (used[v]) vid[v] = g.add_vertex(index_to_pattern(gamma.alphabet(), v, k - 1).str());
  for (const auto& [p, w] : witness_by_pattern) {
    Word pattern = index_to_pattern(gamma.alphabet(), p, k);
    g.add_edge(vid[p / sigma], vid[p % nv], pattern.subword(0, 1));
    out.edge_pattern.push_back(p);
    out.witnesses.push_back(w);
  }
  out.graph = std::move(g);
  return out;
}

double containing_capacity(const ConstraintSet& gamma) {
  EssentialGraph ess = essential_graph(gamma);
  double bits;
  if (ess.graph.num_edges() == 0 || !graph_capacity(ess.graph, &bits)) return 0.0;
  return bits;
}

Word prefix_completion(const ConstraintSet& gamma, const Word& alpha) {
  EssentialGraph ess = essential_graph(gamma);
  if (ess.edge_pattern.empty()) throw infeasible_error("the essential part is empty");
  const int k = gamma.k();
  const auto& alphabet = gamma.alphabet();

  if (alpha.is_empty()) return word_from_measure(ess.witnesses.front(), 1);

  if (alpha.size() < k) {
    // Extend to the lexicographically least edge pattern with alpha as prefix.
    for (int p : ess.edge_pattern) {
      Word pattern = index_to_pattern(alphabet, p, k);
      if (pattern.subword(0, alpha.size()) == alpha) {
        Word rest = prefix_completion(gamma, pattern);
        return concat(pattern.subword(alpha.size(), k - alpha.size()), rest);
      }
    }
    throw infeasible_error("prefix is not generated by the essential graph");
  }

  std::vector<int> route;
  std::vector<Measure> mixture;
  for (const Word& phi : subwords(alpha, k)) {
    int p = pattern_index(phi);
    if (!ess.has_pattern(p))
      throw infeasible_error("prefix is not generated by the essential graph");
    route.push_back(p);
    mixture.push_back(ess.witness_for(p));
  }
  std::vector<Rational> weights(mixture.size(), Rational(1, (long)mixture.size()));
  Measure eta = mix(mixture, weights);

  BigInt m_den = eta.common_denominator();
  std::map<int, long> need;
  for (int p : route) ++need[p];
  BigInt scale = 1;
  for (const auto& [p, cnt] : need) {
    // smallest s with s * M * eta(p) >= cnt
    Rational per = eta[p] * Rational(m_den, 1);
    BigInt per_int = numerator(per);  // integer by construction
    BigInt s = (BigInt(cnt) + per_int - 1) / per_int;
    scale = std::max(scale, s);
  }
  int start = route.front() / alphabet->size();
  for (int attempt = 0; attempt < 5; ++attempt) {
    MultiDigraph g = measure_graph(eta, scale);
    try {
      std::vector<int> full = eulerian_cycle(g, start, route);
      Word word = word_from_route(alphabet, k, start, full);
      return word.subword(alpha.size(), word.size() - alpha.size());
    } catch (const std::invalid_argument&) {
      scale *= 2;
    }
  }
  throw infeasible_error("could not complete the prefix by Eulerian closure");
}

bool admissible_words_in_ess(const ConstraintSet& gamma, const std::vector<Word>& samples) {
  EssentialGraph ess = essential_graph(gamma);
  for (const Word& w : samples) {
    if (w.size() < gamma.k()) continue;
    if (!is_admissible(gamma, w)) continue;
    for (const Word& phi : subwords(w, gamma.k()))
      if (!ess.has_pattern(pattern_index(phi))) return false;
  }
  return true;
}

ZeroCapacityReport zero_capacity_equiv(const ConstraintSet& gamma) {
  ZeroCapacityReport out;
  CapacityResult cap = capacity_scs(gamma);
  out.capB_zero = !cap.feasible || cap.value < 1e-6;

  EssentialGraph ess = essential_graph(gamma);
  const LabeledDigraph& g = ess.graph;
  std::vector<int> outdeg(g.num_vertices(), 0), indeg(g.num_vertices(), 0);
  for (const auto& e : g.edges()) {
    ++outdeg[e.src];
    ++indeg[e.dst];
  }
  bool cycles_only = true;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (outdeg[v] != 1 || indeg[v] != 1) cycles_only = false;
  out.cap_sup_zero = g.num_edges() == 0 || cycles_only;
  if (cycles_only && g.num_edges() > 0) {
    std::vector<bool> seen(g.num_vertices(), false);
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (seen[v]) continue;
      std::vector<std::string> cycle;
      int cur = v;
      while (!seen[cur]) {
        seen[cur] = true;
        cycle.push_back(g.vertex_name(cur));
        cur = g.edges()[g.out_edges(cur)[0]].dst;
      }
      out.cycles.push_back(std::move(cycle));
    }
  }
  return out;
}

std::string essential_dot(const EssentialGraph& g) {
  std::ostringstream out;
  out << "digraph ess {\n";
  for (int v = 0; v < g.graph.num_vertices(); ++v)
    out << "  \"" << g.graph.vertex_name(v) << "\";\n";
  for (size_t i = 0; i < g.graph.edges().size(); ++i) {
    const auto& e = g.graph.edges()[i];
    Word pattern = index_to_pattern(g.alphabet, g.edge_pattern[i], g.k);
    out << "  \"" << g.graph.vertex_name(e.src) << "\" -> \"" << g.graph.vertex_name(e.dst)
        << "\" [label=\"" << e.label.str() << "\", comment=\"phi=" << pattern.str()
        << " eta=" << to_string(g.witnesses[i][g.edge_pattern[i]]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace scs
