#include "helpers.hpp"
#include "scs/block_encoder.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace scs;
using namespace scs::testing;

namespace {
const Rational kEps(5, 1000);
}

TEST_CASE("minimum safe block length") {
  CHECK(min_block_length(2, kEps) == 200);
  CHECK(min_block_length(2, 1) == 1);
  CHECK(min_block_length(3, Rational(1, 10)) == 20);
  CHECK(min_block_length(4, Rational(3, 7)) == 7);
}

TEST_CASE("finer verification separates safe and unsafe lengths") {
  ConstraintSet rll = rll_system();
  CHECK(verify_block_length(rll, kEps, 5).ok);
  for (int m = 6; m <= 9; ++m) {
    BlockVerification v = verify_block_length(rll, kEps, m);
    CHECK(!v.ok);
    CHECK(v.violated_constraint == 0);
    CHECK(v.limit_value > Rational(41, 200));
  }
  CHECK(verify_block_length(rll, kEps, 10).ok);
}

TEST_CASE("unsafe lengths come with a concrete witness") {
  BlockVerification v = verify_block_length(rll_system(), kEps, 6);
  REQUIRE(!v.ok);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->size() == 6);
  CHECK(is_admissible(shrink(rll_system(), kEps), *v.witness));
}

TEST_CASE("block code construction matches the hand counts") {
  BlockCode c5 = build_block_code(rll_system(), kEps, 5);
  CHECK(c5.codewords.size() == 13);
  CHECK(c5.bits_per_block == 3);
  CHECK(std::is_sorted(c5.codewords.begin(), c5.codewords.end()));

  BlockCode c10 = build_block_code(rll_system(), kEps, 10);
  CHECK(c10.codewords.size() == 379);
  CHECK(c10.bits_per_block == 8);
  BlockRate r = block_rate(c10);
  CHECK(r.achieved == doctest::Approx(0.8));
  CHECK(r.ceiling >= r.achieved);
}

TEST_CASE("free system reaches rate one") {
  BlockCode c = build_block_code(free_system(2), Rational(1, 4), 3, true);
  CHECK(c.codewords.size() == 8);
  CHECK(block_rate(c).achieved == doctest::Approx(1.0));
}

TEST_CASE("relatively fat but not fat systems are rejected") {
  CHECK_THROWS_AS(build_block_code(two_cycle_hull(), Rational(1, 100), 8), infeasible_error);
  CHECK_THROWS_AS(build_block_code(golden_mean(), Rational(1, 100), 8), infeasible_error);
}

TEST_CASE("empty or zero-bit codebooks are infeasible") {
  // eps so large the shrunk bound is negative: no admissible word at all.
  CHECK_THROWS_AS(build_block_code(rll_system(), Rational(1, 2), 10), infeasible_error);
}

TEST_CASE("encode and decode round trip") {
  BlockCode code = build_block_code(rll_system(), kEps, 10);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto bits = random_bits(rng, static_cast<size_t>(code.bits_per_block) * (1 + trial % 7));
    Word w = block_encode(code, bits);
    CHECK(w.size() == 10 * (bits.size() / code.bits_per_block));
    CHECK(is_admissible(rll_system(), w));
    CHECK(block_decode(code, w) == bits);
  }
  // Empty payload and the rank-zero block.
  CHECK(block_encode(code, {}).is_empty());
  Word zero = block_encode(code, std::vector<uint8_t>(code.bits_per_block, 0));
  CHECK(zero == code.codewords.front());
}

TEST_CASE("decoding an unknown block fails with its offset") {
  BlockCode code = build_block_code(rll_system(), kEps, 10);
  Word bad = Word::parse(code.alphabet, "1111111111");
  CHECK_THROWS_AS(block_decode(code, bad), decode_error);
  Word short_block = Word::parse(code.alphabet, "010101");
  CHECK_THROWS_AS(block_decode(code, short_block), decode_error);
}

TEST_CASE("block code serialization round trips") {
  BlockCode code = build_block_code(rll_system(), kEps, 5);
  std::stringstream buf;
  save_block_code(code, buf);
  BlockCode back = load_block_code(buf);
  CHECK(back.m == code.m);
  CHECK(back.k == code.k);
  CHECK(back.eps == code.eps);
  CHECK(back.bits_per_block == code.bits_per_block);
  REQUIRE(back.codewords.size() == code.codewords.size());
  for (size_t i = 0; i < code.codewords.size(); ++i)
    CHECK(back.codewords[i].str() == code.codewords[i].str());
}
