#include "helpers.hpp"
#include "scs/sliding_encoder.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace scs;
using namespace scs::testing;

TEST_CASE("window system of the free system is the full de Bruijn graph") {
  WindowSystem ws = build_window_system(free_system(2), 3);
  CHECK(ws.allowed_windows.size() == 8);
  CHECK(ws.presentation.num_vertices() == 4);
  CHECK(ws.presentation.num_edges() == 8);
}

TEST_CASE("window system of the golden mean") {
  WindowSystem ws = build_window_system(golden_mean(), 2);
  CHECK(ws.allowed_windows.size() == 3);  // 00, 01, 10
  CHECK(ws.presentation.num_vertices() == 2);
  CHECK(ws.presentation.num_edges() == 3);
  auto binary = ws.alphabet;
  CHECK(windows_allowed(ws, Word::parse(binary, "00100")));
  CHECK(!windows_allowed(ws, Word::parse(binary, "00110")));
  Word w = generate_word(ws, 40, 5);
  CHECK(w.size() >= 40);
  CHECK(windows_allowed(ws, w));
}

TEST_CASE("presentations are definite within the window length") {
  WindowSystem ws = build_window_system(rll_system(), 5);
  CHECK(is_definite(ws.presentation, ws.m, 0));
}

TEST_CASE("containment bound and window slack") {
  CHECK(containment_bound(2, 6, Rational(1, 20)) == 801);
  CHECK(containment_bound(2, 10, Rational(1, 100)) == 14401);
  CHECK(containment_bound(2, 2, Rational(1, 20)) == 1);  // m = k degenerates
  CHECK(containment_bound(3, 3, Rational(1, 7)) == 2);
  CHECK(tolerance_S(2, 6, 100) == Rational(40, 99));
  CHECK(tolerance_S(2, 2, 50) == 0);
}

TEST_CASE("power graph concatenates path labels") {
  WindowSystem ws = build_window_system(golden_mean(), 2);
  LabeledDigraph g2 = power_graph(ws.presentation, 2);
  CHECK(g2.num_vertices() == 2);
  CHECK(g2.num_edges() == 5);  // 00,01,10 from state 0; 00,01 from state 1
  CHECK(g2.label_length() == 2);
  for (const auto& e : g2.edges()) CHECK(e.label.str() != "11");
}

TEST_CASE("follower merge collapses equivalent states and keeps distinct ones") {
  auto binary = Alphabet::binary();
  LabeledDigraph db = debruijn(binary, 2);
  LabeledDigraph merged = follower_merge(db);
  CHECK(merged.num_vertices() == 1);  // all followers equal in the full shift
  CHECK(merged.num_edges() == 2);

  WindowSystem gm = build_window_system(golden_mean(), 2);
  LabeledDigraph same = follower_merge(gm.presentation);
  CHECK(same.num_vertices() == 2);
  CHECK(same.num_edges() == 3);
}

TEST_CASE("franaszek vector for the full shift") {
  auto binary = Alphabet::binary();
  std::vector<BigInt> x = franaszek_vector(debruijn(binary, 1), 1, 1);
  REQUIRE(x.size() == 2);
  CHECK(x[0] == 1);
  CHECK(x[1] == 1);
}

TEST_CASE("franaszek vector for the golden mean at rate 2/3") {
  WindowSystem gm = build_window_system(golden_mean(), 2);
  std::vector<BigInt> x = franaszek_vector(gm.presentation, 2, 3);
  REQUIRE(x.size() == 2);
  CHECK(x[0] > 0);
  CHECK(x[1] > 0);
  // Verify the certificate A^3 x >= 4 x by hand: A = [[1,1],[1,0]].
  BigInt y0 = 3 * x[0] + 2 * x[1];
  BigInt y1 = 2 * x[0] + 1 * x[1];
  CHECK(y0 >= 4 * x[0]);
  CHECK(y1 >= 4 * x[1]);
}

TEST_CASE("rates above capacity are rejected") {
  WindowSystem gm = build_window_system(golden_mean(), 2);
  CHECK_THROWS_AS(franaszek_vector(gm.presentation, 1, 1), rate_error);
}

TEST_CASE("state splitting leaves all-ones vectors alone") {
  auto binary = Alphabet::binary();
  LabeledDigraph db = debruijn(binary, 1);
  auto [g, x] = state_split_round(db, {BigInt(1), BigInt(1)}, 1);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 4);
  CHECK(x == std::vector<BigInt>{BigInt(1), BigInt(1)});
}

TEST_CASE("golden mean encoder at rate 2/3 round trips") {
  Encoder e = build_sliding_encoder(golden_mean(), 2, 2, 3);
  CHECK(e.p == 2);
  CHECK(e.q == 3);
  CHECK(e.num_states > 0);
  CHECK(static_cast<int>(e.edges.size()) == e.num_states * 4);
  for (int s = 0; s < e.num_states; ++s) {
    REQUIRE(e.out[s].size() == 4);
    std::set<uint32_t> tags;
    for (int id : e.out[s]) {
      const auto& edge = e.edges[id];
      CHECK(edge.src == s);
      CHECK(edge.label.size() == 3);
      tags.insert(edge.tag);
    }
    CHECK(tags == std::set<uint32_t>{0, 1, 2, 3});
  }
  CHECK(flush_symbols(e) == e.anticipation * e.q);

  WindowSystem ws = build_window_system(golden_mean(), 2);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto bits = random_bits(rng, 2 * (1 + rng() % 40));
    Word w = encoder_encode(e, bits);
    CHECK(w.size() == 3 * (bits.size() / 2) + flush_symbols(e));
    CHECK(windows_allowed(ws, w));
    CHECK(encoder_decode(e, w) == bits);
  }
  CHECK(encoder_encode(e, {}).size() == static_cast<size_t>(flush_symbols(e)));
}

TEST_CASE("encoder serialization round trips") {
  Encoder e = build_sliding_encoder(golden_mean(), 2, 2, 3);
  std::stringstream buf;
  save_encoder(e, buf);
  Encoder back = load_encoder(buf);
  CHECK(back.p == e.p);
  CHECK(back.q == e.q);
  CHECK(back.anticipation == e.anticipation);
  CHECK(back.num_states == e.num_states);
  CHECK(back.start_state == e.start_state);
  REQUIRE(back.edges.size() == e.edges.size());
  for (size_t i = 0; i < e.edges.size(); ++i) {
    CHECK(back.edges[i].src == e.edges[i].src);
    CHECK(back.edges[i].dst == e.edges[i].dst);
    CHECK(back.edges[i].tag == e.edges[i].tag);
    CHECK(back.edges[i].label.str() == e.edges[i].label.str());
  }
  std::mt19937_64 rng(3);
  auto bits = random_bits(rng, 20);
  CHECK(encoder_decode(back, encoder_encode(e, bits)) == bits);
}
