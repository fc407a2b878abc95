#include "helpers.hpp"
#include "scs/graphs.hpp"

#include <doctest.h>

#include <random>

using namespace scs;
using namespace scs::testing;

TEST_CASE("de Bruijn graph shape") {
  auto binary = Alphabet::binary();
  LabeledDigraph g = debruijn(binary, 2);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 8);
  for (int v = 0; v < 4; ++v) CHECK(g.out_edges(v).size() == 2);
}

TEST_CASE("strongly connected components in reverse topological order") {
  auto binary = Alphabet::binary();
  LabeledDigraph g(binary, 1);
  int a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
  Word zero = Word::parse(binary, "0");
  g.add_edge(a, b, zero);
  g.add_edge(b, a, zero);
  g.add_edge(b, c, zero);
  auto comps = strongly_connected_components(g);
  REQUIRE(comps.size() == 2);
  // {c} has no outgoing edges, so it comes before {a, b}.
  CHECK(comps[0] == std::vector<int>{c});
  std::vector<int> ab = comps[1];
  std::sort(ab.begin(), ab.end());
  CHECK(ab == std::vector<int>{a, b});
}

TEST_CASE("language membership by subset walk") {
  auto binary = Alphabet::binary();
  // Golden-mean graph: no 11 factor.
  LabeledDigraph g(binary, 1);
  int s0 = g.add_vertex("0"), s1 = g.add_vertex("1");
  g.add_edge(s0, s0, Word::parse(binary, "0"));
  g.add_edge(s0, s1, Word::parse(binary, "1"));
  g.add_edge(s1, s0, Word::parse(binary, "0"));
  CHECK(language_member(g, Word::parse(binary, "010010")));
  CHECK(!language_member(g, Word::parse(binary, "0110")));
}

TEST_CASE("definiteness detection") {
  auto binary = Alphabet::binary();
  LabeledDigraph db = debruijn(binary, 2);
  // Order-2 de Bruijn: two labels pin the vertex, so (2,0)-definite.
  CHECK(is_definite(db, 2, 0));
  LabeledDigraph g(binary, 1);
  int a = g.add_vertex("a"), b = g.add_vertex("b");
  Word zero = Word::parse(binary, "0");
  g.add_edge(a, a, zero);
  g.add_edge(a, b, zero);
  g.add_edge(b, a, zero);
  // All-zero labels never disambiguate.
  CHECK(!is_definite(g, 3, 2));
}

TEST_CASE("dot export is deterministic") {
  auto binary = Alphabet::binary();
  LabeledDigraph g = debruijn(binary, 1);
  CHECK(to_dot(g) == to_dot(debruijn(binary, 1)));
  CHECK(to_dot(g).find("digraph") != std::string::npos);
}

TEST_CASE("measure graph structure") {
  auto binary = Alphabet::binary();
  VectorXq v(4);
  v << Rational(1, 2), Rational(1, 6), Rational(1, 6), Rational(1, 6);
  Measure eta(binary, 2, v);
  MultiDigraph g = measure_graph(eta, 1);
  CHECK(g.total_edges() == 6);
  CHECK(g.multiplicity(0) == 3);
  CHECK(g.out_degree(0) == 4);
  CHECK(g.in_degree(0) == 4);
  CHECK(g.support_strongly_connected());
  CHECK(has_word(eta));
}

TEST_CASE("disconnected support admits no word") {
  auto binary = Alphabet::binary();
  VectorXq v(4);
  v << Rational(1, 2), 0, 0, Rational(1, 2);  // two separate self loops
  Measure eta(binary, 2, v);
  CHECK(eta.is_shift_invariant());
  CHECK(!has_word(eta));
}

TEST_CASE("eulerian word realizes the measure exactly") {
  auto binary = Alphabet::binary();
  VectorXq v(4);
  v << Rational(1, 2), Rational(1, 6), Rational(1, 6), Rational(1, 6);
  Measure eta(binary, 2, v);
  Word w = word_from_measure(eta, 1);
  CHECK(w.size() == 7);  // 6 edges + k - 1
  CHECK(kmer_frequency(w, 2) == eta);
}

TEST_CASE("forced prefix routes keep the prefix") {
  auto binary = Alphabet::binary();
  VectorXq v(4);
  v << Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4);
  Measure eta(binary, 2, v);
  MultiDigraph g = measure_graph(eta, 1);
  // Force the route to start 0 -> 1 (pattern 01).
  std::vector<int> route = eulerian_cycle(g, 0, {1});
  CHECK(route.size() == 4);
  CHECK(route[0] == 1);
  Word w = word_from_route(binary, 2, 0, route);
  CHECK(w.size() == 5);
  CHECK(w.subword(0, 2).str() == "01");
  CHECK(kmer_frequency(w, 2) == eta);
}

TEST_CASE("random rational shift-invariant measures round trip") {
  auto binary = Alphabet::binary();
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 100) {
    long a = rng() % 8, b = rng() % 8, c = rng() % 8;
    long total = a + 2 * b + c;
    if (total == 0) continue;
    VectorXq v(4);
    v << Rational(a, total), Rational(b, total), Rational(b, total), Rational(c, total);
    Measure eta(binary, 2, v);
    if (!has_word(eta)) continue;
    Word w = word_from_measure(eta, 1);
    CHECK(kmer_frequency(w, 2) == eta);
    ++done;
  }
}
