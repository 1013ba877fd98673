#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "gdyn/error.hpp"
#include "gdyn/oracle.hpp"
#include "gdyn/corpus.hpp"
#include "support.hpp"

using namespace gdyn;
using gdyn::test::discrete;
using gdyn::test::sierpinski;

TEST(Subbasis, SingleOpenPointCompletesToSierpinski) {
  Space s = sierpinski();
  EXPECT_EQ(s.min_open(0), make_set(2, {0}));
  EXPECT_EQ(s.min_open(1), make_set(2, {0, 1}));
  EXPECT_EQ(all_opens(s).size(), 3u);
}

TEST(Subbasis, SingletonsGiveDiscrete) {
  Space s = space_from_subbasis({"a", "b"}, std::vector<std::vector<std::string>>{{"a"}, {"b"}});
  EXPECT_TRUE(s.is_discrete());
  EXPECT_EQ(s.min_open(1), make_set(2, {1}));
}

TEST(Subbasis, OverlappingPairs) {
  Space s = space_from_subbasis({"0", "1", "2"}, std::vector<std::vector<std::string>>{{"0", "1"}, {"1", "2"}});
  EXPECT_EQ(s.min_open(1), make_set(3, {1}));
  EXPECT_EQ(s.min_open(0), make_set(3, {0, 1}));
  EXPECT_EQ(s.min_open(2), make_set(3, {1, 2}));
}

TEST(Subbasis, UnknownPointThrows) {
  EXPECT_THROW(space_from_subbasis({"a"}, std::vector<std::vector<std::string>>{{"z"}}), TopologyError);
}

TEST(SpaceCtor, RejectsNonTransitiveMinOpens) {
  // b in U(a) but U(b) not inside U(a)
  EXPECT_THROW(Space({"a", "b", "c"}, {make_set(3, {0, 1}), make_set(3, {1, 2}), make_set(3, {2})}),
               TopologyError);
  EXPECT_THROW(Space({"a", "b"}, {make_set(2, {1}), make_set(2, {1})}), TopologyError);
}

TEST(Closure, Sierpinski) {
  Space s = sierpinski();
  EXPECT_EQ(s.closure(make_set(2, {0})), make_set(2, {0, 1}));
  EXPECT_EQ(s.closure(make_set(2, {1})), make_set(2, {1}));
  EXPECT_TRUE(s.closure(s.empty_set()).none());
}

TEST(Interior, SierpinskiClosedPoint) {
  Space s = sierpinski();
  PointSet b = make_set(2, {1});
  EXPECT_TRUE(s.interior(b).none());
  EXPECT_FALSE(s.is_dense(b));
  EXPECT_TRUE(s.is_nowhere_dense(b));
  EXPECT_EQ(s.interior(s.full()), s.full());
  EXPECT_TRUE(s.is_dense(s.full()));
}

TEST(Interior, DiscretePoint) {
  Space s = discrete(2);
  PointSet a = make_set(2, {0});
  EXPECT_EQ(s.interior(a), a);
  EXPECT_FALSE(s.is_dense(a));
  EXPECT_FALSE(s.is_nowhere_dense(a));
}

TEST(Product, Examples) {
  EXPECT_TRUE(product(discrete(2), discrete(2)).is_discrete());
  Space sq = product(sierpinski(), sierpinski());
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_EQ(sq.min_open(*sq.index_of("(b,b)")), sq.full());
  EXPECT_EQ(product(discrete(2), discrete(3)).size(), 6u);
  EXPECT_EQ(sq.name(1), "(a,b)");
}

TEST(Continuity, Examples) {
  Space s = sierpinski();
  EXPECT_TRUE(is_continuous(s, identity_map(2)));
  EXPECT_TRUE(is_continuous(s, PointMap{1, 1}));
  EXPECT_TRUE(is_continuous(s, PointMap{0, 0}));
  EXPECT_FALSE(is_continuous(s, PointMap{1, 0}));
  EXPECT_EQ(discontinuity(s, s, PointMap{1, 0}), std::optional<std::size_t>(1));
}

namespace {

bool brute_continuous(const Space& s, const PointMap& f) {
  for (const auto& o : oracle::opens(s))
    if (!s.is_open(preimage(o, f))) return false;
  return true;
}

void for_all_maps(std::size_t n, const std::function<void(const PointMap&)>& fn) {
  PointMap f(n, 0);
  while (true) {
    fn(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace

TEST(Continuity, AgreesWithPreimageTestOnAllSmallSpaces) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Space& s : all_spaces(n))
      for_all_maps(n, [&](const PointMap& f) {
        ASSERT_EQ(is_continuous(s, f), brute_continuous(s, f));
        ++checked;
      });
  EXPECT_GT(checked, 1000u);
}

TEST(Topology, UnionsOfMinimalOpensFormTopology) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Space& s : all_spaces(n)) {
      auto opens = all_opens(s);
      std::set<std::vector<bool>> keyed;
      auto key = [](const PointSet& p) {
        std::vector<bool> v;
        for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p.test(i));
        return v;
      };
      for (const auto& o : opens) keyed.insert(key(o));
      ASSERT_TRUE(keyed.count(key(s.empty_set())));
      ASSERT_TRUE(keyed.count(key(s.full())));
      for (const auto& a : opens)
        for (const auto& b : opens) {
          ASSERT_TRUE(keyed.count(key(a | b)));
          ASSERT_TRUE(keyed.count(key(a & b)));
        }
      ASSERT_EQ(opens.size(), oracle::opens(s).size());
    }
}

TEST(Closure, KuratowskiLaws) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Space& s : all_spaces(n))
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        PointSet a(n, mask);
        PointSet c = s.closure(a);
        ASSERT_TRUE(a.is_subset_of(c));
        ASSERT_EQ(s.closure(c), c);
        ASSERT_TRUE(s.is_closed(c));
        ASSERT_EQ(s.interior(a), ~s.closure(~a));
        for (unsigned sub = mask;; sub = (sub - 1) & mask) {
          ASSERT_TRUE(s.closure(PointSet(n, sub)).is_subset_of(c));
          if (sub == 0) break;
        }
      }
}

TEST(Product, OpensAreUnionsOfRectangles) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Space& l : all_spaces(n))
      for (const Space& r : all_spaces(2)) {
        Space p = product(l, r);
        auto lo = all_opens(l), ro = all_opens(r);
        std::vector<PointSet> rects;
        for (const auto& a : lo)
          for (const auto& b : ro) {
            PointSet rect(p.size());
            for_each_member(a, [&](std::size_t i) { for_each_member(b, [&](std::size_t j) { rect.set(i * r.size() + j); }); });
            rects.push_back(rect);
          }
        const std::size_t cells = p.size();
        for (unsigned mask = 0; mask < (1u << cells); ++mask) {
          PointSet w(cells, mask);
          PointSet u(cells);
          for (const auto& rect : rects)
            if (rect.is_subset_of(w)) u |= rect;
          ASSERT_EQ(p.is_open(w), u == w);
        }
      }
}

TEST(Power, CoordinatesAreRowMajor) {
  EXPECT_EQ(power_coordinates(5, 3, 2), (std::vector<std::size_t>{1, 2}));
  Space p = power(discrete(2), 3);
  EXPECT_EQ(p.size(), 8u);
  EXPECT_EQ(p.name(3), "(0,1,1)");
}

TEST(Homeomorphism, SierpinskiHasOnlyIdentity) {
  EXPECT_TRUE(is_homeomorphism(sierpinski(), identity_map(2)));
  EXPECT_FALSE(is_homeomorphism(sierpinski(), PointMap{1, 0}));
  EXPECT_EQ(automorphisms(sierpinski()).size(), 1u);
  EXPECT_EQ(automorphisms(discrete(3)).size(), 6u);
}

TEST(AllOpens, BoundIsEnforced) { EXPECT_THROW(all_opens(discrete(8), 100), BoundError); }
