#include <gtest/gtest.h>

#include "mccool/cohomology.hpp"
#include "mccool/error.hpp"
#include "support.hpp"

using namespace mccool;
using namespace mccool::testing;

namespace {

CohomologyClass mono(int n, std::string_view text) { return CohomologyClass::monomial(n, parse_monomial(text, n)); }

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

CohomologyClass random_class(Rng& rng, int n, int degree) {
  CohomologyClass c(n, degree);
  const auto b = basis(n, degree);
  if (b.empty()) return c;
  for (int t = 0; t < 2; ++t) {
    c.add(b[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(b.size()) - 1))], uniform(rng, -2, 2));
  }
  return c;
}

}  // namespace

TEST(Normalize, Examples) {
  EXPECT_EQ(format_class(normalize(3, parse_monomial("d[3,2]*d[3,1]", 3))), "-d[2,1]*d[3,2]");
  EXPECT_TRUE(normalize(3, parse_monomial("d[2,1]*d[2,1]", 3)).is_zero());
  EXPECT_EQ(normalize(3, parse_monomial("d[2,1]*d[3,2]", 3)), mono(3, "d[2,1]*d[3,2]"));
  EXPECT_THROW(normalize(3, {{2, 2}}), Error);
  EXPECT_THROW(normalize(3, {{4, 1}}), Error);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(mono(3, "d[3,1]"), mono(3, "d[3,2]")), mono(3, "d[2,1]*d[3,2]"));
  const CohomologyClass a = mono(4, "d[2,1]*d[4,3]");
  EXPECT_EQ(multiply(a, CohomologyClass::unit(4)), a);
  EXPECT_EQ(multiply(CohomologyClass::unit(4), a), a);
  const CohomologyClass step = multiply(mono(3, "d[3,1]"), mono(3, "d[3,2]"));
  EXPECT_TRUE(multiply(mono(3, "d[2,1]"), step).is_zero());
  EXPECT_TRUE(normalize(3, parse_monomial("d[2,1]*d[3,1]*d[3,2]", 3)).is_zero());
  EXPECT_THROW(multiply(mono(3, "d[2,1]"), mono(4, "d[2,1]")), Error);
}

TEST(Basis, Examples) {
  std::vector<std::string> got;
  for (const auto& m : basis(3, 2)) got.push_back(format_monomial(m));
  EXPECT_EQ(got, (std::vector<std::string>{"d[2,1]*d[3,1]", "d[2,1]*d[3,2]"}));
  got.clear();
  for (const auto& m : basis(3, 1)) got.push_back(format_monomial(m));
  EXPECT_EQ(got, (std::vector<std::string>{"d[2,1]", "d[3,1]", "d[3,2]"}));
  for (int n = 2; n <= 5; ++n) {
    ASSERT_EQ(basis(n, 0).size(), 1u);
    EXPECT_TRUE(basis(n, 0).front().empty());
  }
  EXPECT_THROW(basis(3, 3), Error);
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare_polynomial(3).coefficients, ints({1, 3, 2}));
  EXPECT_EQ(poincare_polynomial(4).coefficients, ints({1, 6, 11, 6}));
  EXPECT_EQ(poincare_polynomial(2).coefficients, ints({1, 1}));
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(poincare_polynomial(n), poincare_product(n));
}

TEST(Poincare, PairsWithEnvelopingSeries) {
  // P(-t) * prod 1/(1 - k t) = 1.
  for (int n = 2; n <= 7; ++n) {
    const auto p = poincare_polynomial(n).coefficients;
    const auto c = closed_form_series(n, 10).coefficients;
    for (int d = 1; d <= 10; ++d) {
      Integer sum = 0;
      for (int m = 0; m <= d && m < static_cast<int>(p.size()); ++m) {
        sum += (m % 2 ? -1 : 1) * p[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(d - m)];
      }
      EXPECT_EQ(sum, 0) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Oracle, Ranks) {
  EXPECT_EQ(oracle_reduce(3, 3), (std::vector<std::int64_t>{1, 3, 2, 0}));
  EXPECT_EQ(oracle_reduce(2, 1), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(oracle_reduce(4, 2)[2], 11);
  for (int n = 2; n <= 4; ++n) {
    const auto r = oracle_reduce(n, n);
    for (int k = 0; k <= n - 1; ++k) EXPECT_EQ(r[static_cast<std::size_t>(k)], static_cast<long>(basis(n, k).size()));
    EXPECT_EQ(r[static_cast<std::size_t>(n)], 0);
  }
}

TEST(Relations, BothFamiliesVanish) {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 2; i <= n; ++i) {
      for (int k = 1; k < i; ++k) EXPECT_TRUE(normalize(n, {{i, k}, {i, k}}).is_zero());
      for (int j = 1; j < i; ++j) {
        for (int k = 1; k < j; ++k) {
          CohomologyClass r = normalize(n, {{i, j}, {i, k}}) - normalize(n, {{i, j}, {j, k}});
          EXPECT_TRUE(r.is_zero()) << i << j << k;
        }
      }
    }
  }
}

TEST(NormalizeProperty, Confluence) {
  Rng rng(61);
  for (int t = 0; t < 1000; ++t) {
    const int n = uniform(rng, 2, 5);
    const Monomial f = random_factors(rng, n, uniform(rng, 0, 4));
    EXPECT_EQ(normalize_random(n, f, 1, rng), normalize(n, f)) << format_monomial(f);
  }
}

TEST(NormalizeProperty, CommutativityAndAssociativity) {
  Rng rng(62);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 3, 6);
    const CohomologyClass a = random_class(rng, n, uniform(rng, 0, 2));
    const CohomologyClass b = random_class(rng, n, uniform(rng, 0, 2));
    const CohomologyClass c = random_class(rng, n, uniform(rng, 0, 1));
    CohomologyClass ba = multiply(b, a);
    if ((a.degree() * b.degree()) % 2) ba *= -1;
    EXPECT_EQ(multiply(a, b), ba);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(Text, Monomials) {
  EXPECT_EQ(format_monomial(parse_monomial("d[2,1] * d[3,2]", 3)), "d[2,1]*d[3,2]");
  EXPECT_TRUE(parse_monomial("1", 3).empty());
  EXPECT_EQ(format_monomial({}), "1");
  EXPECT_THROW(parse_monomial("d[1,2]", 3), ParseError);
  EXPECT_THROW(parse_monomial("d[2,1]*", 3), ParseError);
  EXPECT_THROW(parse_monomial("e[2,1]", 3), ParseError);
  EXPECT_EQ(format_class(CohomologyClass(3, 1)), "0");
  CohomologyClass c(3, 1);
  c.add({{3, 1}}, 2);
  c.add({{2, 1}}, -1);
  EXPECT_EQ(format_class(c), "-d[2,1] + 2*d[3,1]");
  EXPECT_THROW(c.add({{3, 1}, {3, 2}}, 1), Error);
}
