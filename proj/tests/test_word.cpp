#include <gtest/gtest.h>

#include "mccool/error.hpp"
#include "mccool/word.hpp"
#include "support.hpp"

using namespace mccool;
using namespace mccool::testing;

namespace {

Word w(std::string_view text, int rank = 3) { return parse_word(text, rank); }

}  // namespace

TEST(Word, ReduceCancels) {
  const std::vector<Letter> a{{1, 1}, {1, -1}, {2, 1}};
  EXPECT_EQ(reduce(a, 3), w("x2"));
  EXPECT_TRUE(reduce({}, 3).empty());
  const std::vector<Letter> nested{{1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, 1}};
  EXPECT_EQ(reduce(nested, 3), w("x3"));
}

TEST(Word, ReduceRejectsBadIndex) {
  const std::vector<Letter> bad{{4, 1}};
  EXPECT_THROW(reduce(bad, 3), Error);
  const std::vector<Letter> zero{{0, 1}};
  EXPECT_THROW(reduce(zero, 3), Error);
}

TEST(Word, Multiply) {
  EXPECT_EQ(w("x1 x2") * w("X2 x3"), w("x1 x3"));
  EXPECT_EQ(w("x1 x2") * Word(3), w("x1 x2"));
  EXPECT_TRUE((w("x1") * w("X1")).empty());
  EXPECT_THROW(w("x1") * w("x1", 2), Error);
}

TEST(Word, Invert) {
  EXPECT_EQ(invert(w("x1 x2")), w("X2 X1"));
  EXPECT_TRUE(invert(Word(3)).empty());
  EXPECT_EQ(invert(w("X3")), w("x3"));
}

TEST(Word, Commutator) {
  EXPECT_EQ(commutator(w("x1"), w("x2")), w("X1 X2 x1 x2"));
  EXPECT_TRUE(commutator(w("x1"), w("x1")).empty());
  EXPECT_TRUE(commutator(w("x1 x2"), w("x1 x2")).empty());
}

TEST(Word, PeelConjugate) {
  const auto a = peel_conjugate(w("X2 x1 x2"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->conjugator, w("x2"));
  EXPECT_EQ(a->generator, 1);
  EXPECT_EQ(a->sign, 1);

  const auto b = peel_conjugate(w("x1"));
  ASSERT_TRUE(b);
  EXPECT_TRUE(b->conjugator.empty());
  EXPECT_EQ(b->generator, 1);

  EXPECT_FALSE(peel_conjugate(w("x1 x2")));
  EXPECT_FALSE(peel_conjugate(Word(3)));

  const auto c = peel_conjugate(w("x1 X3 X1"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->conjugator, w("X1"));
  EXPECT_EQ(c->generator, 3);
  EXPECT_EQ(c->sign, -1);
}

TEST(Word, ParseAndFormat) {
  const Word a = w("x1 X2");
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (Letter{1, 1}));
  EXPECT_EQ(a[1], (Letter{2, -1}));
  EXPECT_TRUE(w("").empty());
  EXPECT_EQ(format_word(w("x1 X1")), "");
  EXPECT_EQ(w("x1*X2 * x3"), w("x1 X2 x3"));
  EXPECT_EQ(format_word(w("x1*X2  x3")), "x1 X2 x3");
}

TEST(Word, ParseErrorsCarryPosition) {
  try {
    parse_word("x1 y2", 3);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_word("x0", 3), ParseError);
  EXPECT_THROW(parse_word("x4", 3), ParseError);
  EXPECT_THROW(parse_word("x", 3), ParseError);
  EXPECT_THROW(parse_word("x1x2", 3), ParseError);
}

TEST(Word, RaisedKeepsLetters) {
  const Word a = w("x1 X2", 2).raised(4);
  EXPECT_EQ(a.rank(), 4);
  EXPECT_EQ(format_word(a), "x1 X2");
  EXPECT_THROW(w("x1", 3).raised(2), Error);
}

TEST(WordProperty, ReduceIdempotent) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const Word once = reduce(random_letters(rng, 3, 20), 3);
    EXPECT_EQ(reduce(once.letters(), 3), once);
    for (std::size_t i = 0; i + 1 < once.size(); ++i) EXPECT_NE(once[i], once[i + 1].inverse());
  }
}

TEST(WordProperty, GroupAxioms) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const Word a = reduce(random_letters(rng, 4, 10), 4);
    const Word b = reduce(random_letters(rng, 4, 10), 4);
    const Word c = reduce(random_letters(rng, 4, 10), 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * Word(4), a);
    EXPECT_EQ(Word(4) * a, a);
    EXPECT_EQ(invert(invert(a)), a);
    EXPECT_TRUE((a * invert(a)).empty());
  }
}

TEST(WordProperty, FormatRoundTrip) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const Word a = reduce(random_letters(rng, 12, 15), 12);
    EXPECT_EQ(parse_word(format_word(a), 12), a);
  }
}

TEST(WordProperty, PeelReassembles) {
  Rng rng(14);
  for (int t = 0; t < 500; ++t) {
    const Word u = random_reduced_word(rng, 4, uniform(rng, 0, 8));
    const int j = uniform(rng, 1, 4);
    const int s = random_sign(rng);
    const Word input = invert(u) * Word::generator(4, j, s) * u;
    const auto shape = peel_conjugate(input);
    ASSERT_TRUE(shape);
    EXPECT_EQ(shape->generator, j);
    EXPECT_EQ(shape->sign, s);
    EXPECT_EQ(invert(shape->conjugator) * Word::generator(4, j, s) * shape->conjugator, input);
    EXPECT_LE(shape->conjugator.size(), u.size());
  }
}
