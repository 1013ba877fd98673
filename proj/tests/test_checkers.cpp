#include <gtest/gtest.h>

#include "gdyn/checkers.hpp"
#include "gdyn/corpus.hpp"
#include "gdyn/error.hpp"
#include "gdyn/oracle.hpp"
#include "support.hpp"

using namespace gdyn;
using gdyn::test::discrete;
using gdyn::test::sierpinski;

namespace {

GSystem fx(std::string_view name) { return fixture(name).system; }

}  // namespace

TEST(NgHits, Examples) {
  GSystem swap = fx("FIX-Z2SWAP");
  HitProfile h = n_g_hits(swap, make_set(2, {0}), make_set(2, {1}));
  EXPECT_TRUE(h.eventual);
  EXPECT_EQ(h.hit_ks, (std::vector<std::size_t>{1}));

  HitProfile r = n_g_hits(test::rot4(), make_set(4, {0}), make_set(4, {1}));
  EXPECT_FALSE(r.eventual);
  EXPECT_EQ(r.hit_ks, (std::vector<std::size_t>{1}));

  HitProfile s = n_g_hits(test::trivial_system(sierpinski(), identity_map(2)), make_set(2, {0}), make_set(2, {0}));
  EXPECT_TRUE(s.eventual);
  EXPECT_THROW(n_g_hits(swap, PointSet(2), make_set(2, {0})), PreconditionError);
}

TEST(Transitivity, Examples) {
  EXPECT_TRUE(is_g_transitive(fx("FIX-DISC2")).verdict);
  EXPECT_TRUE(is_g_transitive(test::rot4()).verdict);
  EXPECT_TRUE(is_g_transitive(fx("FIX-EX21")).verdict);
}

TEST(Transitivity, CertificatesReplay) {
  GSystem s = fx("FIX-EX21");
  PropertyReport r = is_g_transitive(s);
  ASSERT_TRUE(r.verdict);
  const std::size_t b = s.space().basis_points().size();
  ASSERT_EQ(r.witness.certificates.size(), b * b);
  for (const auto& c : r.witness.certificates) {
    PointSet img = s.action().translate(c.g, image(s.space().min_open(c.u), s.iterates().power(c.k)));
    EXPECT_TRUE(img.intersects(s.space().min_open(c.v)));
  }
}

TEST(Transitivity, FalseVerdictCarriesNeverHittingPair) {
  GSystem s = test::trivial_system(discrete(2), identity_map(2));
  PropertyReport r = is_g_transitive(s);
  ASSERT_FALSE(r.verdict);
  ASSERT_EQ(r.witness.sets.size(), 2u);
  EXPECT_TRUE(oracle::pair_never_hits(s, r.witness.sets[0], r.witness.sets[1]));
}

TEST(TotalTransitivity, Examples) {
  PropertyReport d = is_totally_g_transitive(fx("FIX-DISC2"));
  EXPECT_FALSE(d.verdict);
  EXPECT_EQ(d.witness.iterate, std::optional<std::size_t>(2));
  ASSERT_EQ(d.witness.sets.size(), 2u);
  EXPECT_NE(d.witness.sets[0], d.witness.sets[1]);
  EXPECT_TRUE(is_totally_g_transitive(fx("FIX-Z2SWAP")).verdict);
  PropertyReport r = is_totally_g_transitive(test::rot4());
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.witness.iterate, std::optional<std::size_t>(2));
}

TEST(WeakMixing, Examples) {
  EXPECT_TRUE(is_weakly_g_mixing(fx("FIX-Z2SWAP")).verdict);
  PropertyReport d = is_weakly_g_mixing(fx("FIX-DISC2"));
  ASSERT_FALSE(d.verdict);
  ASSERT_EQ(d.witness.sets.size(), 4u);
  const auto& w = d.witness.sets;
  EXPECT_TRUE(oracle::quadruple_never_hits(fx("FIX-DISC2"), w[0], w[1], w[2], w[3]));
  EXPECT_FALSE(is_weakly_g_mixing(test::rot4()).verdict);
}

TEST(WeakMixing, ProductAndDirectAgree) {
  enumerate_systems(3, {"trivial", "Z2"}, [](const GSystem& s) {
    EXPECT_EQ(weakly_g_mixing_product(s).verdict, weakly_g_mixing_direct(s).verdict);
    return true;
  });
}

TEST(NFold, Examples) {
  EXPECT_EQ(is_n_fold_transitive(test::rot4(), 1).verdict, is_g_transitive(test::rot4()).verdict);
  EXPECT_TRUE(is_n_fold_transitive(fx("FIX-Z2SWAP"), 3).verdict);
  EXPECT_FALSE(is_n_fold_transitive(test::rot4(), 2).verdict);
  EXPECT_THROW(is_n_fold_transitive(test::rot4(), 7), BoundError);
  EXPECT_THROW(is_n_fold_transitive(test::rot4(), 0), PreconditionError);
}

TEST(StrongMixing, Examples) {
  GSystem swap = fx("FIX-Z2SWAP");
  EXPECT_TRUE(is_strongly_g_mixing(swap).verdict);
  EXPECT_FALSE(is_strongly_g_mixing(swap.with_trivial_group()).verdict);
  EXPECT_FALSE(is_g_transitive(swap.with_trivial_group()).verdict);
  EXPECT_TRUE(is_strongly_g_mixing(fx("FIX-SIERP")).verdict);
  PropertyReport r = is_strongly_g_mixing(test::rot4());
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.witness.sets.size(), 2u);
}

TEST(Minimality, Examples) {
  EXPECT_TRUE(is_g_minimal(test::rot4()).verdict);
  PropertyReport s = is_g_minimal(fx("FIX-SIERP"));
  EXPECT_FALSE(s.verdict);
  EXPECT_EQ(s.witness.point, std::optional<std::size_t>(1));
  ASSERT_EQ(s.witness.sets.size(), 1u);
  EXPECT_EQ(s.witness.sets[0], make_set(2, {1}));
  EXPECT_TRUE(is_g_minimal(fx("FIX-Z2SWAP")).verdict);
  EXPECT_EQ(g_transitive_points(fx("FIX-SIERP")), make_set(2, {0}));
}

TEST(MinimalSets, Examples) {
  EXPECT_EQ(g_minimal_sets(fx("FIX-SIERP")), (std::vector<PointSet>{make_set(2, {1})}));
  EXPECT_EQ(g_minimal_sets(test::rot4()), (std::vector<PointSet>{full_set(4)}));
  auto d = g_minimal_sets(fx("FIX-DOUBLING5"));
  EXPECT_FALSE(d.empty());
  EXPECT_EQ(d.front(), make_set(5, {0}));
  EXPECT_EQ(d, oracle::g_minimal_sets(fx("FIX-DOUBLING5")));
}

TEST(Cover, Examples) {
  CoverCriterion r = minimality_cover_criterion(test::rot4());
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.radius.size(), 4u);
  for (auto [u, n] : r.radius) EXPECT_EQ(n, 3u) << u;
  CoverCriterion s = minimality_cover_criterion(fx("FIX-SIERP"));
  EXPECT_FALSE(s.holds);
  EXPECT_EQ(s.failing, std::optional<std::size_t>(0));
  CoverCriterion p = minimality_cover_criterion(test::trivial_system(Space::point("p"), {0}));
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.radius.at(0).second, 0u);
}

TEST(QuotientMinimality, Examples) {
  QuotientMinimality z = quotient_minimality(test::z4mod2());
  EXPECT_TRUE(z.gm && z.induced_minimal);
  QuotientMinimality s = quotient_minimality(fx("FIX-SIERP"));
  EXPECT_FALSE(s.gm || s.induced_minimal);
  QuotientMinimality w = quotient_minimality(fx("FIX-Z2SWAP"));
  EXPECT_TRUE(w.gm && w.induced_minimal);
  Action a(Group::cyclic(2), discrete(3), {{0, 1, 2}, {1, 0, 2}});
  EXPECT_THROW(quotient_minimality(GSystem(a, {2, 0, 2})), PreconditionError);
}

TEST(SgmSufficient, Examples) {
  SgmSufficient w = sgm_sufficient_condition(fx("FIX-Z2SWAP"));
  EXPECT_TRUE(w.applies);
  EXPECT_TRUE(w.conclusion_checked);
  EXPECT_FALSE(sgm_sufficient_condition(test::rot4()).applies);
  EXPECT_FALSE(sgm_sufficient_condition(test::trivial_system(discrete(2), identity_map(2))).applies);
}

TEST(Reports, NonPseudoequivariantInputsAreFlagged) {
  Action a(Group::cyclic(2), discrete(3), {{0, 1, 2}, {1, 0, 2}});
  PropertyReport r = cover_report(GSystem(a, {2, 0, 2}));
  EXPECT_FALSE(r.preconditions.pseudoequivariant);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Tags, RoundTrip) {
  for (Property p : {Property::gt, Property::tgt, Property::wgm, Property::sgm, Property::gm, Property::nfold,
                     Property::cover, Property::quotient_minimal, Property::equivariant,
                     Property::pseudoequivariant})
    EXPECT_EQ(property_from_tag(tag(p)), std::optional<Property>(p));
  EXPECT_FALSE(property_from_tag("mixing"));
}

// Checker and oracle agree on every system with at most 3 points.
TEST(OracleAgreement, ExhaustiveSmallSystems) {
  std::size_t n = enumerate_systems(3, {"trivial", "Z2", "Z3"}, [](const GSystem& s) {
    const std::string ctx = std::to_string(s.size()) + " points";
    EXPECT_EQ(is_g_transitive(s).verdict, oracle::g_transitive(s)) << ctx;
    EXPECT_EQ(is_totally_g_transitive(s).verdict, oracle::totally_g_transitive(s)) << ctx;
    EXPECT_EQ(is_weakly_g_mixing(s).verdict, oracle::weakly_g_mixing(s)) << ctx;
    EXPECT_EQ(is_strongly_g_mixing(s).verdict, oracle::strongly_g_mixing(s)) << ctx;
    EXPECT_EQ(is_g_minimal(s).verdict, oracle::g_minimal(s)) << ctx;
    EXPECT_EQ(g_minimal_sets(s), oracle::g_minimal_sets(s)) << ctx;
    EXPECT_EQ(minimality_cover_criterion(s).holds, oracle::cover_criterion(s)) << ctx;
    if (is_pseudoequivariant(s.action(), s.map())) {
      auto q = quotient_minimality(s);
      auto o = oracle::quotient_minimality(s);
      EXPECT_TRUE(o.induced_defined);
      EXPECT_EQ(q.gm, o.gm);
      EXPECT_EQ(q.induced_minimal, o.induced_minimal);
    }
    return !::testing::Test::HasFailure();
  });
  EXPECT_GT(n, 200u);
}

TEST(ProductCriterion, MatchesProductMinimality) {
  GSystem z = test::z4mod2();
  GSystem w = fx("FIX-Z2SWAP");
  ProductCriterion c = product_orbit_criterion(z, w);
  EXPECT_EQ(c.holds, is_g_minimal(product_system(z, w)).verdict);
  // two copies of a rotation: diagonal orbits are not dense
  GSystem r = test::rot4();
  ProductCriterion rr = product_orbit_criterion(r, r);
  EXPECT_FALSE(rr.holds);
  EXPECT_TRUE(rr.failing);
  EXPECT_FALSE(is_g_minimal(product_system(r, r)).verdict);
}
