#include "scs/measure.hpp"
#include "scs/words.hpp"

#include <doctest.h>

using namespace scs;

TEST_CASE("alphabet ordering and lookup") {
  auto binary = Alphabet::binary();
  CHECK(binary->size() == 2);
  CHECK(binary->name(0) == "0");
  CHECK(binary->name(1) == "1");
  CHECK(binary->index_of("1") == 1);
  CHECK(!binary->index_of("x").has_value());
  auto abc = Alphabet::from_chars("abc");
  CHECK(abc->size() == 3);
  CHECK(abc->single_char());
}

TEST_CASE("word parse and print round trip") {
  auto binary = Alphabet::binary();
  Word w = Word::parse(binary, "01101");
  CHECK(w.size() == 5);
  CHECK(w.str() == "01101");
  CHECK(Word::parse(binary, w.str()) == w);
  auto multi = std::make_shared<const Alphabet>(std::vector<std::string>{"aa", "bb"});
  Word mw = Word::parse(multi, "aa,bb,aa");
  CHECK(mw.size() == 3);
  CHECK(mw.str() == "aa,bb,aa");
}

TEST_CASE("subwords in order with multiplicity") {
  auto binary = Alphabet::binary();
  Word w = Word::parse(binary, "0110");
  auto subs = subwords(w, 2);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].str() == "01");
  CHECK(subs[1].str() == "11");
  CHECK(subs[2].str() == "10");
}

TEST_CASE("suffchop, concat, power") {
  auto binary = Alphabet::binary();
  Word w = Word::parse(binary, "01101");
  CHECK(suffchop(w, 2).str() == "011");
  CHECK(suffchop(w, 5).is_empty());
  CHECK(concat(Word::parse(binary, "01"), Word::parse(binary, "10")).str() == "0110");
  CHECK(power(Word::parse(binary, "01"), 3).str() == "010101");
  CHECK(power(w, 0).is_empty());
}

TEST_CASE("pattern index is base-sigma with first symbol most significant") {
  auto binary = Alphabet::binary();
  CHECK(pattern_index(Word::parse(binary, "00")) == 0);
  CHECK(pattern_index(Word::parse(binary, "01")) == 1);
  CHECK(pattern_index(Word::parse(binary, "10")) == 2);
  CHECK(pattern_index(Word::parse(binary, "11")) == 3);
  for (int i = 0; i < 16; ++i) CHECK(pattern_index(index_to_pattern(binary, i, 4)) == i);
  auto abc = Alphabet::from_chars("abc");
  CHECK(pattern_index(Word::parse(abc, "cb")) == 7);
}

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("0.205") == Rational(41, 200));
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("abc"), parse_error);
}

TEST_CASE("kmer frequency of a word") {
  auto binary = Alphabet::binary();
  Measure fr = kmer_frequency(Word::parse(binary, "0110"), 2);
  CHECK(fr[1] == Rational(1, 3));  // 01
  CHECK(fr[3] == Rational(1, 3));  // 11
  CHECK(fr[2] == Rational(1, 3));  // 10
  CHECK(fr[0] == 0);
}

TEST_CASE("shift invariance and common denominator") {
  auto binary = Alphabet::binary();
  CHECK(Measure::uniform(binary, 2).is_shift_invariant());
  Measure d = Measure::dirac(Word::parse(binary, "01"));
  CHECK(!d.is_shift_invariant());
  VectorXq v(4);
  v << Rational(1, 2), Rational(1, 6), Rational(1, 6), Rational(1, 6);
  Measure m(binary, 2, v);
  CHECK(m.is_shift_invariant());
  CHECK(m.common_denominator() == 6);
}

TEST_CASE("mix is an exact convex combination") {
  auto binary = Alphabet::binary();
  Measure a = Measure::dirac(Word::parse(binary, "00"));
  Measure b = Measure::dirac(Word::parse(binary, "11"));
  Measure m = mix({a, b}, {Rational(1, 3), Rational(2, 3)});
  CHECK(m[0] == Rational(1, 3));
  CHECK(m[3] == Rational(2, 3));
}
