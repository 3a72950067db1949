#include <gtest/gtest.h>

#include <set>

#include "catquant/arrow_field.hpp"
#include "catquant/generators.hpp"
#include "oracles.hpp"

using namespace catquant;

namespace {

// Combine computed from element maps alone: find the arrow whose map is the
// composite, with the right endpoints.
ArrowField oracle_combine(const FiniteCategory& c, const ArrowField& x1, const ArrowField& x2) {
  ArrowField out;
  for (std::size_t a = 0; a < x1.size(); ++a) {
    const auto& f = c.arrow(x1.assignment[a]);
    const auto& g = c.arrow(x2.assignment[f.cod.index]);
    const auto m = oracle::compose(*g.map, *f.map);
    std::optional<ArrowId> hit;
    for (std::size_t i = 0; i < c.arrow_count(); ++i) {
      const auto& h = c.arrow(ArrowId{i});
      if (h.dom == f.dom && h.cod == g.cod && *h.map == m) hit = ArrowId{i};
    }
    out.assignment.push_back(hit.value());
  }
  return out;
}

}  // namespace

TEST(ArrowFields, Counts) {
  EXPECT_EQ(count_arrow_fields(two_object_example()), 12.0);
  EXPECT_EQ(enumerate_arrow_fields(two_object_example()).size(), 12u);
  EXPECT_EQ(count_arrow_fields(five_object_example()), 54.0);
  EXPECT_EQ(enumerate_arrow_fields(five_object_example()).size(), 54u);
  EXPECT_EQ(enumerate_arrow_fields(discrete_category({"only"})).size(), 1u);
  EXPECT_EQ(count_arrow_fields(four_causal_sets_category()), 10.0 * 19 * 67 * 31);
  EXPECT_THROW(enumerate_arrow_fields(four_causal_sets_category()), CapExceeded);
}

TEST(ArrowFields, EnumerationIsDistinctAndValid) {
  const auto c = five_object_example();
  const auto fields = enumerate_arrow_fields(c);
  std::set<ArrowField> seen(fields.begin(), fields.end());
  EXPECT_EQ(seen.size(), fields.size());
  for (const auto& x : fields) EXPECT_NO_THROW(check_field(c, x));
  EXPECT_TRUE(std::is_sorted(fields.begin(), fields.end()));
}

TEST(ArrowFields, CombineExample) {
  const auto c = two_object_example();
  const auto xf1 = delta_field(c, c.arrow_named("f1"));
  const auto xg = delta_field(c, c.arrow_named("g"));
  const auto x = combine(c, xf1, xg);
  EXPECT_EQ(c.arrow(x(c.object_named("A"))).name, "id_A");  // g ∘ f1
  EXPECT_EQ(c.arrow(x(c.object_named("B"))).name, "g");
  const auto y = combine(c, xg, xf1);
  EXPECT_EQ(c.arrow(y(c.object_named("A"))).name, "f1");
  EXPECT_EQ(c.arrow(y(c.object_named("B"))).name, "r");  // f1 ∘ g
  EXPECT_EQ(x, oracle_combine(c, xf1, xg));
  EXPECT_EQ(y, oracle_combine(c, xg, xf1));
}

TEST(ArrowFields, CombineAgreesWithMapOracleOnAllPairs) {
  for (const auto& c : {two_object_example(false), two_object_example(true)}) {
    const auto fields = enumerate_arrow_fields(c);
    for (const auto& x1 : fields)
      for (const auto& x2 : fields) ASSERT_EQ(combine(c, x1, x2), oracle_combine(c, x1, x2));
  }
}

TEST(ArrowFields, RhoOnFigureTwo) {
  const auto c = five_object_example();
  const auto x = make_field(c, {c.arrow_named("x1"), c.arrow_named("x2"), c.arrow_named("x3"), c.arrow_named("y"),
                                c.arrow_named("id_C")});
  const auto r = rho(c, x);
  const auto B = c.object_named("B"), C = c.object_named("C");
  EXPECT_EQ(r, (std::vector<ObjectId>{B, B, B, C, C}));
  EXPECT_EQ(rho_preimage(c, x, B).size(), 3u);
  EXPECT_EQ(rho_preimage(c, x, C).size(), 2u);
  EXPECT_TRUE(rho_preimage(c, x, c.object_named("A1")).empty());
}

TEST(ArrowFields, MakeFieldRejectsWrongDomain) {
  const auto c = two_object_example();
  EXPECT_THROW(make_field(c, {c.arrow_named("g"), c.arrow_named("id_B")}), StructuralError);
  EXPECT_THROW(make_field(c, {c.arrow_named("id_A")}), StructuralError);
}

TEST(ArrowFields, DeltaAndIdentity) {
  const auto c = two_object_example();
  const auto iota = identity_field(c);
  EXPECT_EQ(c.arrow(iota(ObjectId{0})).name, "id_A");
  const auto xs = delta_field(c, c.arrow_named("s"));
  EXPECT_EQ(c.arrow(xs(ObjectId{0})).name, "id_A");
  EXPECT_EQ(c.arrow(xs(ObjectId{1})).name, "s");
  EXPECT_EQ(describe_field(c, xs), "{A:id_A, B:s}");
}

TEST(MonoidLaws, ExhaustiveOnSmallCategories) {
  for (const auto& c : {two_object_example(false), two_object_example(true), five_object_example(), chain_category(4)}) {
    const auto fields = enumerate_arrow_fields(c);
    const auto rep = check_monoid_laws(c, fields);
    EXPECT_TRUE(rep.ok()) << c.name() << ": " << rep.associativity.first_failure << rep.unit.first_failure
                          << rep.right_action.first_failure;
    const auto n = fields.size();
    EXPECT_EQ(rep.associativity.checked, n * n * n);
    EXPECT_EQ(rep.unit.checked, n);
    EXPECT_EQ(rep.right_action.checked, n * n);
  }
}

TEST(MonoidLaws, CorruptedTableBreaksFieldAssociativity) {
  const auto c = two_object_example();
  const auto bad = c.with_composite(c.arrow_named("r"), c.arrow_named("s"), c.arrow_named("id_B"));
  const auto rep = check_monoid_laws(bad, enumerate_arrow_fields(bad));
  EXPECT_FALSE(rep.associativity.ok());
  EXPECT_FALSE(rep.associativity.first_failure.empty());
}

TEST(MonoidLaws, EndoDeltaAntirepresentation) {
  for (const auto& c : {two_object_example(false), two_object_example(true), five_object_example()})
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      const auto r = endo_antirep_check(c, ObjectId{a});
      EXPECT_TRUE(r.ok()) << r.antirep.first_failure;
      EXPECT_TRUE(r.delta_injective);
    }
  // Direct instance: X_s & X_r = X_(r o s) = X_r, while X_r & X_s = X_s.
  const auto c = two_object_example();
  const auto xr = delta_field(c, c.arrow_named("r")), xs = delta_field(c, c.arrow_named("s"));
  EXPECT_EQ(combine(c, xs, xr), xr);
  EXPECT_EQ(combine(c, xr, xs), xs);
}

TEST(Sampling, SeededAndReproducible) {
  const auto c = four_causal_sets_category();
  const auto a = sample_arrow_fields(c, 20, 7);
  const auto b = sample_arrow_fields(c, 20, 7);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_arrow_fields(c, 20, 8));
  for (const auto& x : a) EXPECT_NO_THROW(check_field(c, x));
}
