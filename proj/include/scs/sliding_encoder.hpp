#pragma once

#include "scs/capacity.hpp"
#include "scs/constraints.hpp"
#include "scs/graphs.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace scs {

/// N_m(Gamma): the fully constrained system of words all of whose length-m
/// windows are admissible, with its graph presentations.
struct WindowSystem {
  AlphabetPtr alphabet;
  int k = 0;
  int m = 0;
  std::vector<Word> allowed_windows;  // B_m(Gamma), sorted
  /// Vertices are (m-1)-words pruned to the maximal-capacity irreducible
  /// core; edge u -> suffix(u a) labeled a iff the window u a is allowed.
  LabeledDigraph presentation;
  /// The prefix-tree variant over all shorter prefixes, kept unpruned; used
  /// for membership from the empty word.
  LabeledDigraph tree_presentation;

  WindowSystem() : presentation(nullptr, 1), tree_presentation(nullptr, 1) {}
};

WindowSystem build_window_system(const ConstraintSet& gamma, int m);

/// True iff every length-m window of w is allowed.
bool windows_allowed(const WindowSystem& ws, const Word& w);

/// A word generated by a random walk on the presentation core; its windows
/// are allowed by construction. Length >= m.
Word generate_word(const WindowSystem& ws, long length, uint64_t seed);

/// N_eps = (2m-2)(m-k)/eps + k - 1, rounded up: beyond this length, words of
/// N_m(shrink(Gamma, eps)) are admissible in Gamma.
long containment_bound(int k, int m, const Rational& eps);

/// S(k,m,n) = (2m-2)(m-k)/(n-k+1), the weak-admissibility slack of N_m words.
Rational tolerance_S(int k, int m, long n);

/// All length-q paths collapsed to single edges with concatenated labels.
LabeledDigraph power_graph(const LabeledDigraph& g, int q);

/// Quotient of a deterministic graph by follower-set equivalence (partition
/// refinement to depth |V|). Non-deterministic inputs are returned unchanged.
LabeledDigraph follower_merge(const LabeledDigraph& g);

/// Maximal {0..C}-valued fixed point of x <- min(x, floor(A^q x / 2^p)) for
/// the smallest sufficient start scale C; certified A^q x >= 2^p x in exact
/// integers. Throws rate_error when only the zero vector remains.
std::vector<BigInt> franaszek_vector(const LabeledDigraph& g, int p, int q);

/// One out-splitting of a maximal-weight state with an x-consistent weight
/// partition; returns the input unchanged when every weight is already 1.
std::pair<LabeledDigraph, std::vector<BigInt>> state_split_round(const LabeledDigraph& g,
                                                                 std::vector<BigInt> x, int p);

/// p bits in, q symbols out, per-state out-degree exactly 2^p.
struct Encoder {
  AlphabetPtr alphabet;
  int k = 0, m = 0;
  int p = 0, q = 0;
  int anticipation = 0;  // decoder lookahead in q-symbol blocks (0 or 1)
  int start_state = 0;
  int num_states = 0;
  struct Edge {
    int src = 0, dst = 0;
    uint32_t tag = 0;  // p-bit input tag, unique per state
    Word label;        // q symbols
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;  // state -> edge ids indexed by tag
};

/// Pipeline: presentation -> q-th power -> irreducible core -> follower merge
/// -> Franaszek vector -> state splitting to all-ones -> trim and tag.
Encoder build_sliding_encoder(const ConstraintSet& gamma, int m, int p, int q);

int flush_symbols(const Encoder& e);

/// Payload length must be a multiple of p; the output ends with the flush
/// tail needed to resolve the decoder's anticipation.
Word encoder_encode(const Encoder& e, const std::vector<uint8_t>& bits);
std::vector<uint8_t> encoder_decode(const Encoder& e, const Word& w);

/// Versioned binary format (magic, version, p, q, anticipation, m, start
/// state, alphabet, tagged edges).
void save_encoder(const Encoder& e, std::ostream& out);
Encoder load_encoder(std::istream& in);

}  // namespace scs
