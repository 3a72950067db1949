#include <gtest/gtest.h>

#include <set>

#include "catquant/generators.hpp"
#include "oracles.hpp"

using namespace catquant;

namespace {

using Rel = std::set<std::pair<std::size_t, std::size_t>>;

// Hand-written orders for the four causal sets, reflexive pairs included.
const std::vector<std::pair<std::size_t, Rel>>& fig1_orders() {
  static const std::vector<std::pair<std::size_t, Rel>> v{
      {1, {{0, 0}}},
      {2, {{0, 0}, {1, 1}, {0, 1}}},
      {4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {1, 3}, {0, 2}, {0, 3}}},
      {3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}}};
  return v;
}

std::size_t oracle_hom(std::size_t s, std::size_t d, bool injective) {
  const auto& [ns, rs] = fig1_orders()[s];
  const auto& [nd, rd] = fig1_orders()[d];
  std::size_t count = 0;
  for (const auto& f : oracle::all_functions(ns, nd)) {
    if (injective && std::set<std::size_t>(f.begin(), f.end()).size() != f.size()) continue;
    if (oracle::monotone(rs, rd, f)) ++count;
  }
  return count;
}

Rel as_set(const FinitePoset& p) { return {p.leq.begin(), p.leq.end()}; }

FiniteTopology sierpinski() { return FiniteTopology::from_sets("S", {"o", "c"}, {{}, {0}, {0, 1}}); }

}  // namespace

TEST(MapEnumeration, LexicographicOrderAndCap) {
  const auto maps = all_maps(2, 2);
  EXPECT_EQ(maps, (std::vector<ElementMap>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(all_maps(3, 3, true).size(), oracle::factorial(3));
  EXPECT_EQ(all_maps(0, 4).size(), 1u);
  EXPECT_TRUE(all_maps(2, 0).empty());
  try {
    all_maps(10, 10, false, 1000);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 1000u);
    EXPECT_DOUBLE_EQ(e.count(), 1e10);
  }
}

TEST(Posets, GeneratedByTakesClosure) {
  const auto y = four_causal_sets()[2];
  EXPECT_TRUE(y.problems().empty());
  EXPECT_EQ(as_set(y), fig1_orders()[2].second);
  EXPECT_THROW(FinitePoset::generated_by("cyc", {"x", "y"}, {{0, 1}, {1, 0}}), StructuralError);
  const FinitePoset not_transitive{"bad", {"x", "y", "z"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}};
  EXPECT_FALSE(not_transitive.problems().empty());
}

TEST(PosetCategory, FourCausalSetHomCountsMatchBruteForce) {
  const auto cat = four_causal_sets_category();
  EXPECT_TRUE(validate_category(cat).ok());
  std::size_t total = 0;
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t d = 0; d < 4; ++d) {
      const auto n = hom_set(cat, ObjectId{s}, ObjectId{d}).size();
      EXPECT_EQ(n, oracle_hom(s, d, false)) << s << "->" << d;
      total += n;
    }
  EXPECT_EQ(total, cat.arrow_count());
  EXPECT_EQ(hom_set(cat, ObjectId{1}, ObjectId{1}).size(), 3u);
  EXPECT_EQ(hom_set(cat, ObjectId{1}, ObjectId{3}).size(), 6u);
  EXPECT_EQ(hom_set(cat, ObjectId{2}, ObjectId{2}).size(), 40u);
  const std::vector<std::size_t> out_degree{10, 19, 67, 31};
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(cat.out_arrows(ObjectId{a}).size(), out_degree[a]);
}

TEST(PosetCategory, InjectiveModeMatchesBruteForce) {
  const auto cat = four_causal_sets_category(ArrowMode::injective_monotone);
  EXPECT_TRUE(validate_category(cat).ok());
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t d = 0; d < 4; ++d)
      EXPECT_EQ(hom_set(cat, ObjectId{s}, ObjectId{d}).size(), oracle_hom(s, d, true)) << s << "->" << d;
  // Injective maps cannot go from a bigger set to a smaller one.
  EXPECT_TRUE(hom_set(cat, ObjectId{2}, ObjectId{1}).empty());
}

TEST(PosetCategory, CompositionAgreesWithMapComposition) {
  const auto cat = four_causal_sets_category();
  for (std::size_t g = 0; g < cat.arrow_count(); g += 7)
    for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
      if (cat.cod(ArrowId{f}) != cat.dom(ArrowId{g})) continue;
      const auto gf = cat.composite(ArrowId{g}, ArrowId{f});
      EXPECT_EQ(*cat.arrow(gf).map, oracle::compose(*cat.arrow(ArrowId{g}).map, *cat.arrow(ArrowId{f}).map));
    }
}

TEST(Topology, SierpinskiAndDiscreteMapCounts) {
  const auto s = sierpinski();
  EXPECT_TRUE(s.problems().empty());
  EXPECT_EQ(continuous_maps(s, s).size(), 3u);
  const auto d = FiniteTopology::discrete("D", {"x", "y"});
  EXPECT_EQ(continuous_maps(d, d).size(), 4u);
  // Any map out of a discrete space is continuous; into it only the constants
  // and the ones with open fibres.
  EXPECT_EQ(continuous_maps(d, s).size(), 4u);
  EXPECT_EQ(continuous_maps(s, d).size(), 2u);
  const auto cat = topology_category({s, d});
  EXPECT_TRUE(validate_category(cat).ok());
  EXPECT_EQ(cat.arrow_count(), 3u + 4u + 4u + 2u);
}

TEST(Topology, ProblemsDetected) {
  FiniteTopology t{"t", {"x", "y"}, {0b01, 0b11}};  // no empty set
  t.normalize();
  EXPECT_FALSE(t.problems().empty());
  FiniteTopology u{"u", {"x", "y", "z"}, {0, 0b001, 0b010, 0b111}};  // union {x,y} missing
  u.normalize();
  EXPECT_FALSE(u.problems().empty());
}

TEST(Topology, RoundTripOnFigureOnePosets) {
  for (const auto& p : four_causal_sets()) {
    const auto t = poset_to_topology(p);
    EXPECT_TRUE(t.problems().empty()) << p.name;
    const auto back = topology_to_poset(t);
    EXPECT_EQ(as_set(back), as_set(p)) << p.name;
    EXPECT_EQ(back.elements, p.elements);
  }
}

TEST(Topology, SpecializationOrderOfSierpinski) {
  const auto p = topology_to_poset(sierpinski());
  // The open point lies below the closed one: every open containing c contains o.
  EXPECT_EQ(as_set(p), (Rel{{0, 0}, {1, 1}, {0, 1}}));
  const FiniteTopology indiscrete{"I", {"x", "y"}, {0, 0b11}};
  EXPECT_THROW(topology_to_poset(indiscrete), StructuralError);
}

TEST(Topology, MonotoneEqualsContinuousOnFigureOnePairs) {
  const auto posets = four_causal_sets();
  for (const auto& s : posets)
    for (const auto& d : posets)
      EXPECT_EQ(monotone_maps(s, d), continuous_maps(poset_to_topology(s), poset_to_topology(d)))
          << s.name << "->" << d.name;
}

TEST(GroupAction, Z2ActionsGiveValidCategories) {
  const auto swap = FiniteGroupAction::cyclic(2, {"u", "v"}, [](std::size_t k, std::size_t q) { return (q + k) % 2; });
  EXPECT_TRUE(swap.problems().empty());
  const auto c = group_action_category(swap);
  EXPECT_TRUE(validate_category(c).ok());
  EXPECT_EQ(c.arrow_count(), 4u);
  EXPECT_EQ(hom_set(c, ObjectId{0}, ObjectId{1}).size(), 1u);
  EXPECT_EQ(c.arrow(c.composite(c.arrow_named("1@v"), c.arrow_named("1@u"))).name, "0@u");

  const auto trivial = FiniteGroupAction::cyclic(2, {"q"}, [](std::size_t, std::size_t q) { return q; });
  const auto t = group_action_category(trivial);
  EXPECT_TRUE(validate_category(t).ok());
  EXPECT_TRUE(endo_monoid(t, ObjectId{0}).is_group());

  auto broken = swap;
  broken.action[0] = {1, 0};  // unit moves points
  EXPECT_FALSE(broken.problems().empty());
  EXPECT_THROW(group_action_category(broken), StructuralError);
}

TEST(Chain, SmallChains) {
  const auto c3 = chain_category(3);
  EXPECT_EQ(c3.arrow_count(), 6u);
  EXPECT_TRUE(validate_category(c3).ok());
  EXPECT_EQ(c3.arrow(c3.composite(c3.arrow_named("1->2"), c3.arrow_named("0->1"))).name, "0->2");
  EXPECT_EQ(chain_category(1).arrow_count(), 1u);
  EXPECT_EQ(chain_category(6).arrow_count(), 21u);
  EXPECT_THROW(chain_category(0), StructuralError);
}

TEST(BuiltIns, TwoObjectVariantsAndFigureTwo) {
  const auto u = two_object_example(true);
  EXPECT_TRUE(validate_category(u).ok());
  EXPECT_EQ(u.arrow_count(), 8u);
  EXPECT_EQ(*u.arrow(u.arrow_named("p")).map, (oracle::Map{1, 0}));
  const auto f2 = five_object_example();
  EXPECT_TRUE(validate_category(f2).ok());
  EXPECT_EQ(f2.object_count(), 5u);
  EXPECT_EQ(f2.arrow_count(), 12u);
  EXPECT_EQ(f2.arrow(f2.composite(f2.arrow_named("y"), f2.arrow_named("x2"))).name, "yx2");
  EXPECT_TRUE(validate_category(discrete_category({"a", "b"})).ok());
}
