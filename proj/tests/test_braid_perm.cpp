#include <gtest/gtest.h>

#include "mccool/braid_perm.hpp"
#include "mccool/error.hpp"
#include "support.hpp"

using namespace mccool;
using namespace mccool::testing;

namespace {

Endomorphism ev(std::string_view text, int n) { return evaluate(parse_expression(text, n)); }

}  // namespace

TEST(Permutation, Basics) {
  const Permutation p({2, 3, 1});
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(3));
  EXPECT_EQ(format_permutation(p), "[2, 3, 1]");
  EXPECT_THROW(Permutation({1, 1, 2}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
  EXPECT_EQ(compose(Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3)), p);
}

TEST(Detect, Examples) {
  const PermConjData s = detect(ev("s[1]", 2));
  EXPECT_EQ(s.lambda, Permutation({2, 1}));
  EXPECT_TRUE(s.conjugators[0].empty());
  EXPECT_EQ(s.conjugators[1], parse_word("x2", 2));

  const PermConjData c = detect(ev("c[2,1]", 2));
  EXPECT_TRUE(c.lambda.is_identity());
  EXPECT_TRUE(c.conjugators[0].empty());
  EXPECT_EQ(c.conjugators[1], parse_word("x1", 2));

  EXPECT_THROW(detect(ev("tau[1]", 2)), Error);
  EXPECT_THROW(detect(ev("delta", 2)), Error);
  EXPECT_THROW(detect(Endomorphism(2, {parse_word("x1", 2), parse_word("X2 x1 x2", 2)})), Error);
}

TEST(Split, Examples) {
  const Splitting s = split(ev("s[1]", 2));
  EXPECT_EQ(s.pure, ev("c[1,2]", 2));
  EXPECT_EQ(s.lambda, Permutation({2, 1}));
  EXPECT_EQ(compose(ev("c[1,2]", 2), permutation_endomorphism(s.lambda)), ev("s[1]", 2));

  const Endomorphism f = ev("c[3,1] c[1,2]^-1", 3);
  const Splitting p = split(f);
  EXPECT_EQ(p.pure, f);
  EXPECT_TRUE(p.lambda.is_identity());

  const Splitting x = split(ev("xi[1]", 2));
  EXPECT_TRUE(is_identity(x.pure));
  EXPECT_EQ(x.lambda, Permutation({2, 1}));
}

TEST(Rho, Examples) {
  const Permutation r = rho(parse_expression("s[1] xi[2]", 3));
  EXPECT_EQ(r, compose(Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3)));
  EXPECT_EQ(r, detect(ev("s[1] xi[2]", 3)).lambda);
  EXPECT_TRUE(rho(parse_expression("xi[1] xi[1]", 3)).is_identity());
  EXPECT_TRUE(rho(GroupExpression(3)).is_identity());
  EXPECT_THROW(rho(parse_expression("c[2,1]", 3)), Error);
}

TEST(BraidPermProperty, ExactSequence) {
  Rng rng(71);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform(rng, 2, 5);
    const GroupExpression e = random_bp_expression(rng, n, uniform(rng, 0, 10));
    const Endomorphism f = evaluate(e);
    const PermConjData data = detect(f);
    EXPECT_EQ(data.lambda, rho(e));
    EXPECT_EQ(reassemble(data), f);
    const Splitting s = split(f);
    EXPECT_TRUE(is_pure_conjugation(s.pure));
    EXPECT_EQ(compose(s.pure, permutation_endomorphism(s.lambda)), f);
    if (data.lambda.is_identity()) EXPECT_EQ(s.pure, f);
  }
}

TEST(BraidPermProperty, SplittingWithChi) {
  Rng rng(72);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 2, 5);
    GroupExpression e = random_bp_expression(rng, n, 4);
    e.append(random_chi_expression(rng, n, 3, Variant::full));
    e.append(random_bp_expression(rng, n, 3));
    const Endomorphism f = evaluate(e);
    const Splitting s = split(f);
    EXPECT_EQ(compose(s.pure, permutation_endomorphism(s.lambda)), f);
    EXPECT_TRUE(is_pure_conjugation(s.pure));
  }
}
