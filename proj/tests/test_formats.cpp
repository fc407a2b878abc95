#include "helpers.hpp"
#include "scs/spec_format.hpp"
#include "scs/stream_io.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace scs;
using namespace scs::testing;

TEST_CASE("spec parsing recovers the full system") {
  Spec spec = parse_spec(
      "# run-length limited, semiconstrained\n"
      "alphabet 01\n"
      "k 2\n"
      "constraint 11 <= 0.205\n"
      "eps 0.005\n"
      "m 10\n"
      "mode block\n");
  CHECK(spec.alphabet->size() == 2);
  CHECK(spec.k == 2);
  REQUIRE(spec.constraints.size() == 1);
  CHECK(spec.constraints[0].coeffs[3] == 1);
  CHECK(spec.constraints[0].rel == Relation::LE);
  CHECK(spec.constraints[0].bound == Rational(41, 200));
  CHECK(spec.eps == Rational(1, 200));
  CHECK(spec.m == 10);
  CHECK(spec.mode == "block");
  CHECK(!spec.p.has_value());
}

TEST_CASE("multi-term constraints with coefficients and named symbols") {
  Spec spec = parse_spec(
      "alphabet aa,bb\n"
      "k 2\n"
      "constraint 2*aa,aa + 1/2*bb,bb - aa,bb < 1\n"
      "constraint bb,aa = 1/4\n");
  REQUIRE(spec.constraints.size() == 2);
  const auto& c = spec.constraints[0];
  CHECK(c.coeffs[0] == 2);            // aa
  CHECK(c.coeffs[1] == Rational(-1)); // ab
  CHECK(c.coeffs[3] == Rational(1, 2));
  CHECK(c.rel == Relation::LT);
  CHECK(spec.constraints[1].rel == Relation::EQ);
  CHECK(spec.constraints[1].coeffs[2] == 1);
}

TEST_CASE("spec errors carry line numbers") {
  auto expect_line = [](const std::string& text, const char* needle) {
    try {
      parse_spec(text);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_line("alphabet 01\nk 2\nconstraint 11 <= 0.2.5\n", "line 3");
  expect_line("alphabet 01\nk 2\nconstraint 21 <= 0.2\n", "line 3");
  expect_line("alphabet 01\nk 2\nconstraint 11 0.2\n", "line 3");
  expect_line("alphabet 01\nk twelve\n", "line 2");
  expect_line("k 2\nconstraint 11 <= 0.2\n", "alphabet");
}

TEST_CASE("bit and byte conversions") {
  std::vector<uint8_t> bytes = {0xA5, 0x01};
  auto bits = bytes_to_bits(bytes);
  REQUIRE(bits.size() == 16);
  CHECK(bits[0] == 1);
  CHECK(bits[7] == 1);
  CHECK(bits[15] == 1);
  CHECK(bits_to_bytes(bits) == bytes);
  auto padded = bits_to_bytes({1, 1, 1});  // tail zero padded
  CHECK(padded == std::vector<uint8_t>{0xE0});
}

TEST_CASE("payload framing is self delimiting") {
  std::mt19937_64 rng(11);
  for (size_t n : {0ul, 1ul, 7ul, 64ul, 129ul}) {
    std::vector<uint8_t> payload(n);
    for (auto& b : payload) b = static_cast<uint8_t>(rng());
    auto bits = frame_payload(payload);
    CHECK(bits.size() == 64 + 8 * n);
    auto padded = pad_to_group(bits, 7);
    CHECK(padded.size() % 7 == 0);
    CHECK(deframe_payload(padded) == payload);
  }
}

TEST_CASE("stream container round trips both modes") {
  auto binary = Alphabet::binary();
  Word w = Word::parse(binary, "0110100110");

  StreamHeader block;
  block.mode = StreamHeader::kModeBlock;
  block.m = 10;
  block.payload_bits = 72;
  std::stringstream buf;
  write_stream(buf, block, w);
  auto [h, back] = read_stream(buf, binary);
  CHECK(h.mode == StreamHeader::kModeBlock);
  CHECK(h.m == 10);
  CHECK(h.payload_bits == 72);
  CHECK(back == w);

  StreamHeader sliding;
  sliding.mode = StreamHeader::kModeSliding;
  sliding.p = 3;
  sliding.q = 4;
  sliding.anticipation = 1;
  sliding.flush_symbols = 4;
  sliding.payload_bits = 120;
  std::stringstream buf2;
  write_stream(buf2, sliding, w);
  auto [h2, back2] = read_stream(buf2, binary);
  CHECK(h2.p == 3);
  CHECK(h2.q == 4);
  CHECK(h2.anticipation == 1);
  CHECK(h2.flush_symbols == 4);
  CHECK(back2 == w);
}

TEST_CASE("stream container packs wide alphabets") {
  auto abc = Alphabet::from_chars("abc");
  Word w = Word::parse(abc, "cabbac");
  StreamHeader h;
  h.mode = StreamHeader::kModeBlock;
  h.m = 3;
  h.payload_bits = 5;
  std::stringstream buf;
  write_stream(buf, h, w);
  auto [h2, back] = read_stream(buf, abc);
  CHECK(back == w);
  CHECK(back.str() == "cabbac");
}

TEST_CASE("corrupt magic is rejected") {
  std::stringstream buf("XXXX garbage");
  auto binary = Alphabet::binary();
  CHECK_THROWS_AS(read_stream(buf, binary), parse_error);
}
