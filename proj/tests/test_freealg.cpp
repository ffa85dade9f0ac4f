#include "helpers.hpp"

#include "qweyl/freealg.hpp"

using namespace qweyl;
using testing::q;

namespace {

MWElement el(std::initializer_list<std::pair<NormalMonomial, QPoly>> terms) {
  MWElement u;
  for (const auto &[m, c] : terms) u.add(m, c);
  return u;
}

} // namespace

TEST_SUITE("freealg") {

TEST_CASE("words") {
  CHECK(Word::parse("xyyx").count_y() == 2);
  CHECK(Word::normal(2, 3).letters() == "xxyyy");
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("xyz"), ParseError);
  CHECK_THROWS_AS(Word::parse("X"), ParseError);
}

TEST_CASE("monomial sequences") {
  auto s = MonomialSeq::parse("(2,3)(3,3) (3,4)");
  REQUIRE(s.size() == 3);
  CHECK(s[2].b == 4);
  CHECK(s.total_a() == 8);
  CHECK(s.total_b() == 10);
  CHECK(s.word().letters() == "xxyyyxxxyyyxxxyyyy");
  CHECK_THROWS_AS(MonomialSeq::parse(""), ParseError);
  CHECK_THROWS_AS(MonomialSeq::parse("(1,2"), ParseError);
  CHECK_THROWS_AS(MonomialSeq::parse("(1,-2)"), ParseError);
  CHECK_THROWS_AS(MonomialSeq::parse("(1,2)x"), ParseError);
}

TEST_CASE("defining relation and small normal forms") {
  CHECK(normal_order(Word::parse("yx")) == el({{{1, 1}, q}, {{2, 0}, 1}}));
  CHECK(normal_order(Word::parse("yxx")) == el({{{2, 1}, q * q}, {{3, 0}, 1 + q}}));
  CHECK(normal_order(Word::parse("xxyy")) == MWElement::term({2, 2}));
  CHECK(normal_order(Word()) == MWElement::one());
}

TEST_CASE("y x^n") {
  for (unsigned n = 0; n <= 10; ++n) {
    CAPTURE(n);
    auto expected = el({{{n, 1}, QPoly::monomial(n)}, {{n + 1, 0}, qbracket(n)}});
    CHECK(normal_order(Word::parse("y" + std::string(n, 'x'))) == expected);
  }
}

TEST_CASE("agreement with the naive rewriter") {
  for (unsigned len = 0; len <= 9; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (unsigned i = 0; i < len; ++i) w += (bits >> i & 1) ? 'y' : 'x';
      CAPTURE(w);
      REQUIRE(normal_order(Word::parse(w)) == testing::to_element(oracle::normal(w)));
    }
}

TEST_CASE("confluence of rewriting strategies") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    auto w = Word::parse(oracle::random_word(rng, 12));
    CAPTURE(w.letters());
    CHECK(normal_order(w, RewriteStrategy::Leftmost) == normal_order(w, RewriteStrategy::Rightmost));
  }
}

TEST_CASE("naturality and exponent bookkeeping") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto w = Word::parse(oracle::random_word(rng, 12));
    auto u = normal_order(w);
    CAPTURE(w.letters());
    CHECK(u.is_natural());
    for (const auto &[m, c] : u.terms()) {
      CHECK(m.y <= w.count_y());
      CHECK(m.x >= w.count_x());
      CHECK((m.x - w.count_x()) + m.y == w.count_y());
    }
  }
}

TEST_CASE("multiplication") {
  auto xy = MWElement::term({1, 1});
  CHECK(multiply(xy, xy) == el({{{2, 2}, q}, {{3, 1}, 1}}));
  CHECK(multiply(MWElement::one(), xy) == xy);
  CHECK(multiply(xy, MWElement::one()) == xy);
  CHECK(multiply(MWElement::term({0, 1}), MWElement::term({3, 0})) ==
        el({{{3, 1}, q * q * q}, {{4, 0}, 1 + q + q * q}}));
  CHECK(multiply(MWElement(), xy).is_zero());
}

TEST_CASE("monomials") {
  CHECK(monomial(MonomialSeq{{2, 3}}) == MWElement::term({2, 3}));
  CHECK(monomial(MonomialSeq{{1, 1}, {1, 1}}) == el({{{2, 2}, q}, {{3, 1}, 1}}));
  CHECK(monomial(MonomialSeq{{0, 1}, {1, 0}}) == el({{{1, 1}, q}, {{2, 0}, 1}}));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<unsigned> len(1, 4), e(0, 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<ExpPair> pairs(len(rng));
    for (auto &p : pairs) p = {e(rng), e(rng)};
    MonomialSeq s(pairs);
    CHECK(monomial(s) == normal_order(s.word()));
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    auto u = testing::random_element(rng, 3, 2), v = testing::random_element(rng, 3, 2),
         w = testing::random_element(rng, 3, 2);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
  }
}

TEST_CASE("multiplication is bilinear") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    auto u = testing::random_element(rng, 3, 3), v = testing::random_element(rng, 3, 3),
         w = testing::random_element(rng, 3, 3);
    CHECK(multiply(u + v, w) == multiply(u, w) + multiply(v, w));
  }
}

TEST_CASE("specialization") {
  auto at1 = specialize_q(el({{{1, 1}, q}, {{2, 0}, 1}}), 1);
  CHECK(at1 == std::map<NormalMonomial, BigRational>{{{1, 1}, 1}, {{2, 0}, 1}});
  auto yxx = specialize_q(normal_order(Word::parse("yxx")), 1);
  CHECK(yxx == std::map<NormalMonomial, BigRational>{{{2, 1}, 1}, {{3, 0}, 2}});
  CHECK(specialize_q(MWElement(), BigRational(5, 2)).empty());
  auto at0 = specialize_q(el({{{1, 1}, q}, {{2, 0}, 1}}), 0);
  CHECK(at0 == std::map<NormalMonomial, BigRational>{{{2, 0}, 1}});
}

TEST_CASE("word length guard") {
  CHECK_THROWS_AS(normal_order(Word::parse(std::string(65, 'x'))), GuardError);
  Limits small;
  small.word_length = 4;
  CHECK_THROWS_AS(normal_order(Word::parse("yxxyx"), RewriteStrategy::Leftmost, small), GuardError);
  CHECK_NOTHROW(normal_order(Word::parse("yxxy"), RewriteStrategy::Leftmost, small));
}

}
