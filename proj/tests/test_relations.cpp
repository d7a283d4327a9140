#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mccool/error.hpp"
#include "mccool/relations.hpp"

using namespace mccool;

namespace {

const RelationInstance* find(const std::vector<RelationInstance>& rs, const std::string& family,
                             std::vector<int> indices) {
  for (const auto& r : rs) {
    if (r.family == family && r.indices == indices) return &r;
  }
  return nullptr;
}

GroupExpression ex(std::string_view text, int n) { return parse_expression(text, n); }

std::size_t count(const std::vector<RelationInstance>& rs, const std::string& family) {
  return static_cast<std::size_t>(
      std::count_if(rs.begin(), rs.end(), [&](const auto& r) { return r.family == family; }));
}

}  // namespace

TEST(McCool, FamilyOneInstance) {
  const auto rs = mccool_relations(3);
  const auto* r = find(rs, "mccool-1", {1, 2, 3});
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->lhs, ex("c[1,2] c[3,2] c[1,3]", 3));
  EXPECT_EQ(r->rhs, ex("c[1,3] c[1,2] c[3,2]", 3));
}

TEST(McCool, FamilyTwoInstance) {
  const auto rs = mccool_relations(4);
  const auto* r = find(rs, "mccool-2", {2, 1, 4, 3});
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(is_identity(evaluate(r->lhs * invert_expression(r->rhs))));
  EXPECT_EQ(r->lhs, commutator(ex("c[2,1]", 4), ex("c[4,3]", 4)));
  EXPECT_TRUE(r->rhs.empty());
}

TEST(McCool, RankTwoIsEmpty) {
  EXPECT_TRUE(mccool_relations(2).empty());
  EXPECT_THROW(mccool_relations(1), Error);
}

TEST(McCool, Counts) {
  // Ordered distinct triples, and ordered 4-tuples of distinct indices.
  for (int n = 3; n <= 6; ++n) {
    const auto rs = mccool_relations(n);
    const std::size_t triples = static_cast<std::size_t>(n * (n - 1) * (n - 2));
    EXPECT_EQ(count(rs, "mccool-1"), triples);
    EXPECT_EQ(count(rs, "mccool-3"), triples);
    EXPECT_EQ(count(rs, "mccool-4"), triples);
    EXPECT_EQ(count(rs, "mccool-2"), triples * static_cast<std::size_t>(n - 3));
  }
}

TEST(Conjugation, TableEntries) {
  const auto r2 = conjugation_formulas(2);
  const auto* tau = find(r2, "tau-conj", {1, 2, 1});
  ASSERT_NE(tau, nullptr);
  EXPECT_EQ(tau->rhs, ex("c[2,1]^-1", 2));
  const auto* xi12 = find(r2, "xi-conj", {1, 1, 2});
  ASSERT_NE(xi12, nullptr);
  EXPECT_EQ(xi12->rhs, ex("c[2,1]", 2));

  const auto r3 = conjugation_formulas(3);
  const auto* xi31 = find(r3, "xi-conj", {1, 3, 1});
  ASSERT_NE(xi31, nullptr);
  EXPECT_EQ(xi31->lhs, ex("xi[1] c[3,1] xi[1]^-1", 3));
  EXPECT_EQ(xi31->rhs, ex("c[3,2]", 3));
}

TEST(Kernel, Examples) {
  const auto rs = kernel_conjugation_formulas(3);
  const auto* iii = find(rs, "kernel-iii", {2, 1});
  ASSERT_NE(iii, nullptr);
  EXPECT_EQ(iii->lhs, ex("c[2,1]^-1 c[3,2] c[2,1]", 3));
  EXPECT_EQ(iii->rhs, ex("c[3,1] c[3,2] c[3,1]^-1", 3));
  const auto* i = find(rs, "kernel-i", {2, 1});
  ASSERT_NE(i, nullptr);
  EXPECT_EQ(i->lhs, ex("c[2,1]^-1 c[3,1] c[2,1]", 3));
  EXPECT_EQ(i->rhs, ex("c[3,1]", 3));
  const auto* vi = find(rs, "kernel-vi", {1, 2});
  ASSERT_NE(vi, nullptr);
  EXPECT_EQ(vi->lhs, ex("c[1,2]^-1 c[2,3] c[1,2]", 3));
  EXPECT_EQ(vi->rhs, ex("c[3,2] c[1,3]^-1 c[3,2]^-1 c[1,3] c[2,3]", 3));
  EXPECT_THROW(kernel_conjugation_formulas(2), Error);
}

TEST(Kernel, StatedSixthFormulaNeedsItsInverse) {
  // Dropping the inverse on the middle factor gives a false identity.
  EXPECT_FALSE(equal(evaluate(ex("c[1,2]^-1 c[2,3] c[1,2]", 3)),
                     evaluate(ex("c[3,2] c[1,3] c[3,2]^-1 c[1,3] c[2,3]", 3))));
}

TEST(BraidPermutation, Examples) {
  const auto r2 = bp_relations(2);
  const auto* square = find(r2, "bp-1-square", {1});
  ASSERT_NE(square, nullptr);
  EXPECT_EQ(square->lhs, ex("xi[1] xi[1]", 2));
  EXPECT_TRUE(square->rhs.empty());
  const auto* factor = find(r2, "bp-factor", {1});
  ASSERT_NE(factor, nullptr);
  EXPECT_EQ(factor->lhs, ex("xi[1] s[1]", 2));
  EXPECT_EQ(factor->rhs, ex("c[2,1]", 2));

  const auto r3 = bp_relations(3);
  const auto* braid = find(r3, "bp-2-braid", {1});
  ASSERT_NE(braid, nullptr);
  EXPECT_EQ(braid->lhs, ex("s[1] s[2] s[1]", 3));
  EXPECT_EQ(braid->rhs, ex("s[2] s[1] s[2]", 3));
}

TEST(BraidPermutation, RightActionFormsFailAsLeftActions) {
  // This mixed relation read without reversal does not hold for left actions.
  EXPECT_FALSE(equal(evaluate(ex("s[1] s[2] xi[1]", 3)), evaluate(ex("xi[2] s[1] s[2]", 3))));
  EXPECT_FALSE(equal(evaluate(ex("s[1] xi[1]", 2)), evaluate(ex("c[2,1]", 2))));
}

TEST(Verify, SmallRanks) {
  const auto r2 = verify_all(2);
  EXPECT_TRUE(r2.ok());
  EXPECT_EQ(r2.families.at("mccool-1").instances, 0u);
  EXPECT_EQ(r2.families.at("kernel-i").instances, 0u);
  const auto r3 = verify_all(3);
  EXPECT_TRUE(r3.ok());
  EXPECT_GT(r3.total(), 0u);
}

TEST(Verify, FamilyFilter) {
  const auto r = verify_all(4, "mccool-2");
  EXPECT_EQ(r.families.size(), 1u);
  EXPECT_EQ(r.total(), 24u);
  EXPECT_TRUE(r.ok());
  const auto bp = verify_all(3, "bp");
  for (const auto& [name, tally] : bp.families) EXPECT_EQ(name.rfind("bp", 0), 0u);
  EXPECT_THROW(verify_all(3, "nope"), Error);
}

TEST(Verify, ResultsSortedAndUnique) {
  const auto r = verify_all(4);
  std::set<std::pair<std::string, std::vector<int>>> seen;
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    EXPECT_TRUE(seen.insert({r.results[i].family, r.results[i].indices}).second);
    if (i > 0) {
      EXPECT_LE(std::tie(r.results[i - 1].family, r.results[i - 1].indices),
                std::tie(r.results[i].family, r.results[i].indices));
    }
  }
}

TEST(Verify, SideConditions) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& r : all_relations(n)) {
      EXPECT_EQ(r.rank(), n);
      if (r.family == "mccool-2") {
        const auto& v = r.indices;
        EXPECT_EQ(std::set<int>(v.begin(), v.end()).size(), 4u);
      }
    }
  }
}
