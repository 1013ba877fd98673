#include <gtest/gtest.h>

#include "gdyn/corpus.hpp"
#include "gdyn/error.hpp"
#include "gdyn/oracle.hpp"
#include "support.hpp"

using namespace gdyn;
using gdyn::test::discrete;
using gdyn::test::sierpinski;

TEST(Group, CatalogHasValidTables) {
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    ASSERT_TRUE(g) << name;
    for (GroupElement a = 0; a < g->order(); ++a) {
      EXPECT_EQ(g->mul(a, g->inverse(a)), g->identity());
      EXPECT_EQ(g->mul(g->identity(), a), a);
    }
  }
  EXPECT_EQ(catalog_group("S3")->order(), 6u);
  EXPECT_EQ(catalog_group("Z2xZ2")->order(), 4u);
  EXPECT_FALSE(catalog_group("Z9"));
}

TEST(Group, RejectsMissingInverse) {
  // {e,g} with g*g = g: closed, associative, identity e, but g has no inverse
  try {
    Group({"e", "g"}, 0, {{0, 1}, {1, 1}});
    FAIL() << "expected GroupError";
  } catch (const GroupError& e) {
    EXPECT_NE(std::string(e.what()).find("group: no inverse for g"), std::string::npos) << e.what();
  }
}

TEST(Group, RejectsNonAssociative) {
  // quasigroup on 3 elements with identity 0 that is not associative
  EXPECT_THROW(Group({"0", "1", "2"}, 0, {{0, 1, 2}, {1, 0, 0}, {2, 2, 0}}), GroupError);
}

TEST(Group, RejectsOutOfRangeEntries) { EXPECT_THROW(Group({"e"}, 0, {{3}}), GroupError); }

TEST(Group, DirectProductNamesAndIndexing) {
  Group g = direct_product(Group::cyclic(2), Group::cyclic(3));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.name(5), "(1,2)");
  EXPECT_EQ(g.mul(5, 5), 0u * 3 + 1);
  EXPECT_EQ(direct_power(Group::klein(), 2).order(), 16u);
}

TEST(Action, OrbitExamples) {
  Action swap = test::z2_swap();
  EXPECT_EQ(swap.orbit(0), make_set(2, {0, 1}));
  Action triv = Action::trivial(discrete(3));
  EXPECT_EQ(triv.orbit(2), make_set(3, {2}));
  EXPECT_EQ(test::z2_plus2().orbit(1), make_set(4, {1, 3}));
}

TEST(Action, SaturateExamples) {
  EXPECT_EQ(test::z2_swap().saturate(make_set(2, {0})), make_set(2, {0, 1}));
  PointSet v = make_set(3, {0, 2});
  EXPECT_EQ(Action::trivial(discrete(3)).saturate(v), v);
  EXPECT_EQ(test::z2_plus2().saturate(make_set(4, {0, 1})), full_set(4));
}

TEST(Action, RejectsBrokenLaws) {
  // identity must act trivially
  EXPECT_THROW(Action(Group::cyclic(2), discrete(2), {{1, 0}, {1, 0}}), ActionError);
  // compatibility: Z3 generator acting as a transposition
  EXPECT_THROW(Action(Group::cyclic(3), discrete(3), {{0, 1, 2}, {1, 0, 2}, {1, 0, 2}}), ActionError);
  // swap on the Sierpinski space is not a homeomorphism
  EXPECT_THROW(Action(Group::cyclic(2), sierpinski(), {{0, 1}, {1, 0}}), ActionError);
}

TEST(Equivariance, Examples) {
  Action a = test::z2_plus2();
  PointMap plus1{1, 2, 3, 0};
  EXPECT_TRUE(is_equivariant(a, plus1));
  EXPECT_TRUE(is_pseudoequivariant(a, plus1));
  Action triv = Action::trivial(sierpinski());
  EXPECT_TRUE(is_equivariant(triv, PointMap{1, 1}));
  EXPECT_TRUE(is_pseudoequivariant(triv, PointMap{1, 1}));
}

TEST(Equivariance, PseudoButNotEquivariant) {
  Fixture f = fixture("FIX-PSEQ");
  EXPECT_TRUE(is_pseudoequivariant(f.system.action(), f.system.map()));
  EXPECT_FALSE(is_equivariant(f.system.action(), f.system.map()));
  EXPECT_TRUE(equivariance_failure(f.system.action(), f.system.map()));
}

TEST(Quotient, Z4ModPlus2) {
  QuotientSystem q = quotient(test::z2_plus2(), PointMap{1, 2, 3, 0});
  ASSERT_EQ(q.space.size(), 2u);
  EXPECT_TRUE(q.space.is_discrete());
  ASSERT_TRUE(q.induced);
  EXPECT_EQ(*q.induced, (PointMap{1, 0}));
  EXPECT_EQ(q.space.name(0), "G(0)");
  EXPECT_EQ(q.proj, (PointMap{0, 1, 0, 1}));
}

TEST(Quotient, TransitiveSwapCollapsesToPoint) {
  QuotientSystem q = quotient(test::z2_swap(), identity_map(2));
  EXPECT_EQ(q.space.size(), 1u);
  ASSERT_TRUE(q.induced);
  EXPECT_EQ(*q.induced, (PointMap{0}));
}

TEST(Quotient, TrivialGroupIsIsomorphic) {
  QuotientSystem q = quotient(Action::trivial(sierpinski()), PointMap{1, 1});
  EXPECT_EQ(q.space.min_opens(), sierpinski().min_opens());
  EXPECT_EQ(*q.induced, (PointMap{1, 1}));
}

TEST(Quotient, NoInducedMapWithoutPseudoequivariance) {
  // swap acts on {0,1}, fixes 2; f sends 0 to 2 and 1 to 0
  Action a(Group::cyclic(2), discrete(3), {{0, 1, 2}, {1, 0, 2}});
  PointMap f{2, 0, 2};
  EXPECT_FALSE(is_pseudoequivariant(a, f));
  EXPECT_FALSE(quotient(a, f).induced);
}

namespace {

void check_quotient_against_enumeration(const Action& a) {
  QuotientSystem q = quotient(a);
  const std::size_t m = q.space.size();
  ASSERT_LE(m, 12u);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    PointSet s(m, mask);
    ASSERT_EQ(q.space.is_open(s), a.space().is_open(lift(q, s)));
  }
  for (const auto& o : all_opens(a.space())) ASSERT_TRUE(q.space.is_open(image(o, q.proj, m)));
}

}  // namespace

TEST(Quotient, OpennessMatchesEnumeration) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Space& s : all_spaces(n))
      for (const auto& gname : {"Z2", "Z3", "Z2xZ2"})
        for (const Action& a : all_actions(*catalog_group(gname), s)) {
          check_quotient_against_enumeration(a);
          ++checked;
        }
  EXPECT_GT(checked, 50u);
}

TEST(Action, LawsHoldOnEnumeratedActions) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Space& s : all_spaces(n))
      for (const Action& a : all_actions(Group::symmetric3(), s)) {
        const Group& g = a.group();
        for (GroupElement e = 0; e < g.order(); ++e) {
          PointMap inv = a.map_of(g.inverse(e));
          ASSERT_EQ(compose(inv, a.map_of(e)), identity_map(n));
          ASSERT_TRUE(is_homeomorphism(s, a.map_of(e)));
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          PointSet v(n, mask);
          PointSet sat = a.saturate(v);
          ASSERT_TRUE(v.is_subset_of(sat));
          ASSERT_EQ(a.saturate(sat), sat);
          for (GroupElement e = 0; e < g.order(); ++e) ASSERT_TRUE(a.translate(e, sat).is_subset_of(sat));
        }
      }
}

TEST(Automorphisms, GeneratorsOfCatalog) {
  EXPECT_EQ(generators(Group::cyclic(6)).size(), 1u);
  EXPECT_EQ(generators(Group::klein()).size(), 2u);
  EXPECT_TRUE(generators(Group::trivial()).empty());
}
