#include "scs/sliding_encoder.hpp"

#include "scs/stream_io.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace scs {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// The SCC with the largest spectral radius (ties: fewest vertices, then
/// first in component order), as an induced subgraph.
LabeledDigraph prune_to_core(const LabeledDigraph& g) {
  auto components = strongly_connected_components(g);
  double best_bits = -1;
  int best = -1;
  std::vector<LabeledDigraph> subs;
  subs.reserve(components.size());
  for (size_t i = 0; i < components.size(); ++i) {
    subs.push_back(g.induced(components[i]));
    double bits;
    if (!graph_capacity(subs.back(), &bits)) continue;
    bool better = bits > best_bits + 1e-9;
    if (!better && bits > best_bits - 1e-9 && best >= 0 &&
        components[i].size() < components[best].size())
      better = true;
    if (better) {
      best_bits = bits;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) throw infeasible_error("graph has no recurrent component");
  return subs[best];
}

}  // namespace

WindowSystem build_window_system(const ConstraintSet& gamma, int m) {
  if (m < gamma.k()) throw std::invalid_argument("window length must be at least k");
  WindowSystem ws;
  ws.alphabet = gamma.alphabet();
  ws.k = gamma.k();
  ws.m = m;
  ws.allowed_windows = enumerate_admissible(gamma, m);
  if (ws.allowed_windows.empty()) throw infeasible_error("no admissible windows of length m");

  // Full (unpruned) order-(m-1) graph over the (m-1)-subwords of windows.
  std::set<std::vector<uint8_t>> vertex_words;
  for (const Word& w : ws.allowed_windows) {
    vertex_words.insert(w.subword(0, m - 1).symbols());
    vertex_words.insert(w.subword(1, m - 1).symbols());
  }
  LabeledDigraph full(ws.alphabet, 1, LabelKind::LastSymbol);
  std::map<std::vector<uint8_t>, int> ids;
  for (const auto& sym : vertex_words)
    ids[sym] = full.add_vertex(Word(ws.alphabet, sym).str());
  for (const Word& w : ws.allowed_windows) {
    int u = ids.at(w.subword(0, m - 1).symbols());
    int v = ids.at(w.subword(1, m - 1).symbols());
    full.add_edge(u, v, w.subword(m - 1, 1));
  }
  ws.presentation = prune_to_core(full);

  // Prefix-tree variant: shorter prefixes feed the full graph.
  std::set<std::vector<uint8_t>> prefixes;
  for (const Word& w : ws.allowed_windows)
    for (int len = 0; len < m - 1; ++len) prefixes.insert(w.subword(0, len).symbols());
  LabeledDigraph tree(ws.alphabet, 1, LabelKind::LastSymbol);
  std::map<std::vector<uint8_t>, int> tree_ids;
  std::vector<std::vector<uint8_t>> ordered(prefixes.begin(), prefixes.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& sym : ordered)
    tree_ids[sym] = tree.add_vertex(Word(ws.alphabet, sym).str());
  for (const auto& sym : vertex_words)
    tree_ids[sym] = tree.add_vertex(Word(ws.alphabet, sym).str());
  for (const auto& sym : ordered) {
    for (int a = 0; a < ws.alphabet->size(); ++a) {
      std::vector<uint8_t> ext = sym;
      ext.push_back(static_cast<uint8_t>(a));
      auto it = tree_ids.find(ext);
      if (it != tree_ids.end())
        tree.add_edge(tree_ids.at(sym), it->second,
                      Word(ws.alphabet, {static_cast<uint8_t>(a)}));
    }
  }
  for (const auto& e : full.edges()) {
    int u = tree_ids.at(Word::parse(ws.alphabet, full.vertex_name(e.src)).symbols());
    int v = tree_ids.at(Word::parse(ws.alphabet, full.vertex_name(e.dst)).symbols());
    tree.add_edge(u, v, e.label);
  }
  ws.tree_presentation = std::move(tree);
  return ws;
}

bool windows_allowed(const WindowSystem& ws, const Word& w) {
  for (int pos = 0; pos + ws.m <= w.size(); ++pos) {
    Word window = w.subword(pos, ws.m);
    if (!std::binary_search(ws.allowed_windows.begin(), ws.allowed_windows.end(), window))
      return false;
  }
  return true;
}

Word generate_word(const WindowSystem& ws, long length, uint64_t seed) {
  const LabeledDigraph& g = ws.presentation;
  if (length < ws.m) throw std::invalid_argument("length must be at least m");
  std::mt19937_64 rng(seed);
  int v = static_cast<int>(rng() % static_cast<uint64_t>(g.num_vertices()));
  std::vector<uint8_t> symbols = Word::parse(ws.alphabet, g.vertex_name(v)).symbols();
  while (static_cast<long>(symbols.size()) < length) {
    const auto& outs = g.out_edges(v);
    const auto& e = g.edges()[outs[rng() % outs.size()]];
    symbols.push_back(e.label[0]);
    v = e.dst;
  }
  return Word(ws.alphabet, std::move(symbols));
}

long containment_bound(int k, int m, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Rational main = Rational((2 * m - 2) * (m - k)) / eps;
  BigInt n = numerator(main), d = denominator(main);
  BigInt c = (n + d - 1) / d;
  return c.convert_to<long>() + k - 1;
}

Rational tolerance_S(int k, int m, long n) {
  return Rational((2 * m - 2) * (m - k), n - k + 1);
}

LabeledDigraph power_graph(const LabeledDigraph& g, int q) {
  LabeledDigraph out(g.alphabet(), g.label_length() * q, g.label_kind());
  for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.vertex_name(v));
  struct Frame {
    int v;
    int depth;
    std::vector<uint8_t> symbols;
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<Frame> stack{{v, 0, {}}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.depth == q) {
        out.add_edge(v, f.v, Word(g.alphabet(), f.symbols));
        continue;
      }
      for (int eid : g.out_edges(f.v)) {
        const auto& e = g.edges()[eid];
        Frame next{e.dst, f.depth + 1, f.symbols};
        next.symbols.insert(next.symbols.end(), e.label.symbols().begin(),
                            e.label.symbols().end());
        stack.push_back(std::move(next));
      }
    }
  }
  return out;
}

LabeledDigraph follower_merge(const LabeledDigraph& g) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    std::set<std::vector<uint8_t>> labels;
    for (int eid : g.out_edges(v))
      if (!labels.insert(g.edges()[eid].label.symbols()).second) return g;  // nondeterministic
  }
  std::vector<int> cls(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::map<std::pair<int, std::vector<std::pair<std::vector<uint8_t>, int>>>, int> next_ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<std::vector<uint8_t>, int>> sig;
      for (int eid : g.out_edges(v))
        sig.emplace_back(g.edges()[eid].label.symbols(), cls[g.edges()[eid].dst]);
      std::sort(sig.begin(), sig.end());
      auto key = std::make_pair(cls[v], std::move(sig));
      auto it = next_ids.find(key);
      if (it == next_ids.end()) it = next_ids.emplace(std::move(key), next_ids.size()).first;
      next[v] = it->second;
    }
    bool stable = next == cls;
    cls = std::move(next);
    if (stable) break;
  }
  int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
  if (num_classes == n) return g;
  std::vector<int> rep(num_classes, -1);
  for (int v = 0; v < n; ++v)
    if (rep[cls[v]] < 0) rep[cls[v]] = v;
  LabeledDigraph out(g.alphabet(), g.label_length(), g.label_kind());
  for (int c = 0; c < num_classes; ++c) out.add_vertex(g.vertex_name(rep[c]));
  for (int c = 0; c < num_classes; ++c)
    for (int eid : g.out_edges(rep[c])) {
      const auto& e = g.edges()[eid];
      out.add_edge(c, cls[e.dst], e.label);
    }
  return out;
}

namespace {

std::vector<std::vector<BigInt>> adjacency_power(const LabeledDigraph& g, int q) {
  const int n = g.num_vertices();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (const auto& e : g.edges()) a[e.src][e.dst] += 1;
  std::vector<std::vector<BigInt>> p(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) p[i][i] = 1;
  for (int step = 0; step < q; ++step) {
    std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p[i][j] != 0)
          for (int l = 0; l < n; ++l) r[i][l] += p[i][j] * a[j][l];
    p = std::move(r);
  }
  return p;
}

}  // namespace

std::vector<BigInt> franaszek_vector(const LabeledDigraph& g, int p, int q) {
  const int n = g.num_vertices();
  auto mat = adjacency_power(g, q);
  const BigInt pow2 = BigInt(1) << p;
  auto fixpoint = [&](const BigInt& scale) {
    std::vector<BigInt> x(n, scale);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        BigInt s = 0;
        for (int j = 0; j < n; ++j)
          if (mat[i][j] != 0) s += mat[i][j] * x[j];
        BigInt y = s / pow2;
        if (y < x[i]) {
          x[i] = y;
          changed = true;
        }
      }
    }
    return x;
  };
  for (int j = 0; j <= 48; ++j) {
    std::vector<BigInt> x = fixpoint(BigInt(1) << j);
    bool nonzero = false;
    for (const auto& v : x) nonzero = nonzero || v != 0;
    if (!nonzero) continue;
    BigInt g_all = 0;
    for (const auto& v : x) g_all = boost::multiprecision::gcd(g_all, v);
    if (g_all > 1)
      for (auto& v : x) v /= g_all;
    // Exact certificate: A^q x >= 2^p x component-wise.
    for (int i = 0; i < n; ++i) {
      BigInt s = 0;
      for (int l = 0; l < n; ++l) s += mat[i][l] * x[l];
      if (s < pow2 * x[i]) throw std::logic_error("Franaszek certificate failed");
    }
    return x;
  }
  throw rate_error("rate p/q is not supported by the graph (zero Franaszek vector)");
}

std::pair<LabeledDigraph, std::vector<BigInt>> state_split_round(const LabeledDigraph& g,
                                                                 std::vector<BigInt> x, int p) {
  const int n = g.num_vertices();
  const long long pow2 = 1LL << p;
  BigInt xmax = 0;
  for (const auto& v : x) xmax = std::max(xmax, v);
  if (xmax <= 1) return {g, std::move(x)};

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] > x[b];
    return a < b;
  });

  for (int u : order) {
    if (x[u] < 2) break;
    long long xu = x[u].convert_to<long long>();
    std::vector<int> edge_ids(g.out_edges(u).begin(), g.out_edges(u).end());
    std::vector<long long> w(edge_ids.size());
    long long total = 0;
    bool overflow = false;
    for (size_t i = 0; i < edge_ids.size(); ++i) {
      const BigInt& wt = x[g.edges()[edge_ids[i]].dst];
      if (wt > BigInt(1) << 40) overflow = true;
      w[i] = overflow ? 0 : wt.convert_to<long long>();
      total += w[i];
    }
    if (overflow) throw std::logic_error("split weights out of range");

    // Subset-sum DP with parents, over achievable out-weight sums.
    std::map<long long, std::pair<long long, int>> parent{{0, {-1, -1}}};
    for (size_t i = 0; i < edge_ids.size(); ++i) {
      std::vector<long long> sums;
      sums.reserve(parent.size());
      for (const auto& kv : parent) sums.push_back(kv.first);
      for (long long s : sums) {
        long long t = s + w[i];
        if (!parent.count(t)) parent[t] = {s, static_cast<int>(i)};
        if (parent.size() > 200000) break;
      }
    }
    long long best_y = -1, best_a = -1, best_score = -1;
    for (const auto& kv : parent) {
      long long y = kv.first;
      long long amax = std::min<long long>(xu - 1, y / pow2);
      long long amin = std::max<long long>(1, xu - (total - y) / pow2);
      if (amin > amax) continue;
      long long a = std::clamp<long long>(
          total > 0 ? (xu * y + total / 2) / total : amin, amin, amax);
      long long score = std::llabs(2 * y - total);
      if (best_y < 0 || score < best_score) {
        best_y = y;
        best_a = a;
        best_score = score;
      }
    }
    if (best_y < 0) continue;

    std::vector<bool> in_class(edge_ids.size(), false);
    for (long long s = best_y; s != 0;) {
      auto [prev, idx] = parent.at(s);
      in_class[idx] = true;
      s = prev;
    }
    std::set<int> class_edges;
    for (size_t i = 0; i < edge_ids.size(); ++i)
      if (in_class[i]) class_edges.insert(edge_ids[i]);

    LabeledDigraph out(g.alphabet(), g.label_length(), g.label_kind());
    for (int v = 0; v < n; ++v)
      out.add_vertex(g.vertex_name(v) + (v == u ? "#0" : ""));
    int u2 = out.add_vertex(g.vertex_name(u) + "#1");
    for (size_t eid = 0; eid < g.edges().size(); ++eid) {
      const auto& e = g.edges()[eid];
      int src = e.src;
      if (src == u && class_edges.count(static_cast<int>(eid))) src = u2;
      out.add_edge(src, e.dst, e.label);
      if (e.dst == u) out.add_edge(src, u2, e.label);
    }
    std::vector<BigInt> x2 = x;
    x2[u] = BigInt(xu - best_a);
    x2.push_back(BigInt(best_a));
    return {std::move(out), std::move(x2)};
  }
  throw std::logic_error("no x-consistent split available despite weights above one");
}

Encoder build_sliding_encoder(const ConstraintSet& gamma, int m, int p, int q) {
  WindowSystem ws = build_window_system(gamma, m);
  double cap = graph_capacity_or_throw(ws.presentation);
  if (cap + 1e-9 < static_cast<double>(p) / q)
    throw rate_error("requested rate exceeds the capacity of the window system");

  LabeledDigraph h = prune_to_core(power_graph(ws.presentation, q));
  h = follower_merge(h);
  std::vector<BigInt> x = franaszek_vector(h, p, 1);

  std::vector<int> live;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (x[v] > 0) live.push_back(v);
  if (live.empty()) throw rate_error("Franaszek vector vanished");
  if (static_cast<int>(live.size()) != h.num_vertices()) {
    std::vector<BigInt> xs;
    for (int v : live) xs.push_back(x[v]);
    h = h.induced(live);
    x = std::move(xs);
  }

  for (int round = 0; round < 10000; ++round) {
    BigInt xmax = 0;
    for (const auto& v : x) xmax = std::max(xmax, v);
    if (xmax <= 1) break;
    auto [h2, x2] = state_split_round(h, std::move(x), p);
    h = std::move(h2);
    x = std::move(x2);
  }

  const int degree = 1 << p;
  Encoder enc;
  enc.alphabet = gamma.alphabet();
  enc.k = gamma.k();
  enc.m = m;
  enc.p = p;
  enc.q = q;
  enc.start_state = 0;
  enc.num_states = h.num_vertices();
  enc.out.resize(enc.num_states);
  bool deterministic = true;
  for (int v = 0; v < h.num_vertices(); ++v) {
    std::vector<int> ids(h.out_edges(v).begin(), h.out_edges(v).end());
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      const auto& ea = h.edges()[a];
      const auto& eb = h.edges()[b];
      if (!(ea.label == eb.label)) return ea.label < eb.label;
      return ea.dst < eb.dst;
    });
    if (static_cast<int>(ids.size()) < degree)
      throw std::logic_error("state splitting left an out-degree below 2^p");
    std::set<std::vector<uint8_t>> labels;
    for (int t = 0; t < degree; ++t) {
      const auto& e = h.edges()[ids[t]];
      if (!labels.insert(e.label.symbols()).second) deterministic = false;
      Encoder::Edge edge;
      edge.src = v;
      edge.dst = e.dst;
      edge.tag = static_cast<uint32_t>(t);
      edge.label = e.label;
      enc.out[v].push_back(static_cast<int>(enc.edges.size()));
      enc.edges.push_back(std::move(edge));
    }
  }
  enc.anticipation = deterministic ? 0 : 1;
  return enc;
}

int flush_symbols(const Encoder& e) { return e.anticipation * e.q; }

Word encoder_encode(const Encoder& e, const std::vector<uint8_t>& bits) {
  if (bits.size() % static_cast<size_t>(e.p) != 0)
    throw std::invalid_argument("payload length must be a multiple of p");
  std::vector<uint8_t> symbols;
  int state = e.start_state;
  for (size_t pos = 0; pos < bits.size(); pos += e.p) {
    uint32_t tag = 0;
    for (int b = 0; b < e.p; ++b) tag = (tag << 1) | bits[pos + b];
    const auto& edge = e.edges[e.out[state][tag]];
    symbols.insert(symbols.end(), edge.label.symbols().begin(), edge.label.symbols().end());
    state = edge.dst;
  }
  if (e.anticipation > 0) {
    const auto& edge = e.edges[e.out[state][0]];  // flush block
    symbols.insert(symbols.end(), edge.label.symbols().begin(), edge.label.symbols().end());
  }
  return Word(e.alphabet, std::move(symbols));
}

std::vector<uint8_t> encoder_decode(const Encoder& e, const Word& w) {
  if (w.size() % e.q != 0) throw decode_error("stream length is not a multiple of q");
  long total_blocks = w.size() / e.q;
  long data_blocks = total_blocks - e.anticipation;
  if (data_blocks < 0) throw decode_error("stream shorter than the flush tail");
  std::vector<uint8_t> bits;
  int state = e.start_state;
  for (long t = 0; t < data_blocks; ++t) {
    Word label = w.subword(static_cast<int>(t) * e.q, e.q);
    std::vector<int> candidates;
    for (int eid : e.out[state])
      if (e.edges[eid].label == label) candidates.push_back(eid);
    int chosen = -1;
    if (candidates.empty()) {
      throw decode_error("undecodable window at offset " + std::to_string(t * e.q));
    } else if (candidates.size() == 1) {
      chosen = candidates[0];
    } else {
      Word next = w.subword(static_cast<int>(t + 1) * e.q, e.q);
      for (int eid : candidates) {
        for (int nid : e.out[e.edges[eid].dst])
          if (e.edges[nid].label == next) {
            chosen = eid;
            break;
          }
        if (chosen >= 0) break;
      }
      if (chosen < 0)
        throw decode_error("undecodable window at offset " + std::to_string(t * e.q));
    }
    uint32_t tag = e.edges[chosen].tag;
    for (int b = e.p - 1; b >= 0; --b) bits.push_back(static_cast<uint8_t>((tag >> b) & 1));
    state = e.edges[chosen].dst;
  }
  return bits;
}

namespace {
constexpr char kEncMagic[4] = {'S', 'C', 'S', 'E'};
constexpr uint8_t kEncVersion = 1;
}  // namespace

void save_encoder(const Encoder& e, std::ostream& out) {
  out.write(kEncMagic, 4);
  io::write_u8(out, kEncVersion);
  io::write_u8(out, static_cast<uint8_t>(e.p));
  io::write_u8(out, static_cast<uint8_t>(e.q));
  io::write_u8(out, static_cast<uint8_t>(e.anticipation));
  io::write_u32(out, static_cast<uint32_t>(e.k));
  io::write_u32(out, static_cast<uint32_t>(e.m));
  io::write_u32(out, static_cast<uint32_t>(e.start_state));
  io::write_u32(out, static_cast<uint32_t>(e.num_states));
  io::write_u32(out, static_cast<uint32_t>(e.alphabet->size()));
  for (int i = 0; i < e.alphabet->size(); ++i) io::write_string(out, e.alphabet->name(i));
  io::write_u64(out, e.edges.size());
  for (const auto& edge : e.edges) {
    io::write_u32(out, static_cast<uint32_t>(edge.src));
    io::write_u32(out, static_cast<uint32_t>(edge.dst));
    io::write_u32(out, edge.tag);
    out.write(reinterpret_cast<const char*>(edge.label.symbols().data()), edge.label.size());
  }
}

Encoder load_encoder(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::string(magic, 4) != std::string(kEncMagic, 4))
    throw parse_error("not an encoder file (bad magic)");
  if (io::read_u8(in) != kEncVersion) throw parse_error("unsupported encoder version");
  Encoder e;
  e.p = io::read_u8(in);
  e.q = io::read_u8(in);
  e.anticipation = io::read_u8(in);
  e.k = static_cast<int>(io::read_u32(in));
  e.m = static_cast<int>(io::read_u32(in));
  e.start_state = static_cast<int>(io::read_u32(in));
  e.num_states = static_cast<int>(io::read_u32(in));
  uint32_t sigma = io::read_u32(in);
  std::vector<std::string> symbols(sigma);
  for (auto& s : symbols) s = io::read_string(in);
  e.alphabet = std::make_shared<const Alphabet>(std::move(symbols));
  uint64_t count = io::read_u64(in);
  e.out.resize(e.num_states);
  for (uint64_t i = 0; i < count; ++i) {
    Encoder::Edge edge;
    edge.src = static_cast<int>(io::read_u32(in));
    edge.dst = static_cast<int>(io::read_u32(in));
    edge.tag = io::read_u32(in);
    std::vector<uint8_t> sym(e.q);
    in.read(reinterpret_cast<char*>(sym.data()), e.q);
    if (in.gcount() != e.q) throw parse_error("truncated encoder file");
    edge.label = Word(e.alphabet, std::move(sym));
    e.out[edge.src].push_back(static_cast<int>(e.edges.size()));
    e.edges.push_back(std::move(edge));
  }
  for (auto& ids : e.out)
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return e.edges[a].tag < e.edges[b].tag; });
  return e;
}

}  // namespace scs
