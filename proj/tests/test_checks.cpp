#include <gtest/gtest.h>

#include "catquant/checks.hpp"
#include "catquant/generators.hpp"

using namespace catquant;

namespace {

const SuiteResult& find(const std::vector<SuiteResult>& v, const std::string& name) {
  for (const auto& s : v)
    if (s.name == name) return s;
  throw std::runtime_error("missing suite " + name);
}

}  // namespace

TEST(Suites, AllPassOnTwoObjectSetPresheaf) {
  const auto c = two_object_example();
  const auto res = run_suites(c, set_presheaf(c), {});
  ASSERT_EQ(res.size(), suite_names().size());
  for (const auto& s : res) EXPECT_TRUE(s.ok()) << s.name;
  EXPECT_EQ(find(res, "monoid").data["fields"], 12);
  EXPECT_EQ(find(res, "commutant").data["dimension_with_adjoints"], 1);
  EXPECT_EQ(find(res, "separation").data["parallel_pairs"], 4);
  EXPECT_EQ(find(res, "connectedness").data["components"], 1);
}

TEST(Suites, TrivialPresheafFailsSeparationOnly) {
  const auto c = two_object_example();
  const auto res = run_suites(c, trivial_presheaf(c), {});
  for (const auto& s : res) EXPECT_EQ(s.ok(), s.name != "separation") << s.name;
  const auto& un = find(res, "separation").data["unseparated"];
  EXPECT_NE(std::find(un.begin(), un.end(), nlohmann::json::array({"f1", "f2"})), un.end());
}

TEST(Suites, FigureTwoTrivialPresheaf) {
  const auto c = five_object_example();
  const auto res = run_suites(c, trivial_presheaf(c), {});
  for (const auto& s : res) EXPECT_TRUE(s.ok()) << s.name;
  const auto& adj = find(res, "adjoint");
  // Maximised over all 54 fields: sending every object to C gives |rho^-1{C}| = 5.
  EXPECT_EQ(adj.data["max_adagger_a_eigenvalue"], 5);
  EXPECT_EQ(adj.checks.size(), 7u);
}

TEST(Suites, CapExceededWithoutSample) {
  const auto c = four_causal_sets_category();
  EXPECT_THROW(run_suites(c, set_presheaf(c), {"monoid"}), CapExceeded);
  // Suites that never enumerate fields still run.
  const auto res = run_suites(c, set_presheaf(c), {"category", "presheaf", "momentum"});
  for (const auto& s : res) EXPECT_TRUE(s.ok()) << s.name;
}

TEST(Suites, SampledFigureOne) {
  const auto c = four_causal_sets_category();
  CheckOptions opt;
  opt.sample = 25;
  opt.seed = 4;
  const auto res = run_suites(c, set_presheaf(c), {"monoid", "multiplier", "homomorphism", "adjoint"}, opt);
  for (const auto& s : res) EXPECT_TRUE(s.ok()) << s.name;
  EXPECT_EQ(find(res, "monoid").data["fields"], 26);  // sample plus the identity field
}

TEST(Suites, UnknownSuiteRejected) {
  const auto c = two_object_example();
  EXPECT_THROW(run_suites(c, set_presheaf(c), {"nope"}), StructuralError);
}

TEST(Suites, BrokenPresheafStopsAfterPresheafSuite) {
  const auto c = two_object_example();
  auto p = set_presheaf(c);
  p.kappa[c.arrow_named("g").index] = ComplexMatrix{{1, 1}};
  const auto res = run_suites(c, p, {"presheaf", "multiplier"});
  ASSERT_EQ(res.size(), 1u);
  EXPECT_FALSE(res[0].ok());
}

TEST(Suites, HomomorphismReportsCorruption) {
  const auto c = two_object_example();
  auto p = set_presheaf(c);
  p.kappa[c.arrow_named("r").index] = ComplexMatrix{{0, 1}, {1, 0}};
  const auto s = homomorphism_suite(c, p, enumerate_arrow_fields(c), {});
  EXPECT_FALSE(s.ok());
  EXPECT_FALSE(s.checks[0].ok());  // a_product
  EXPECT_TRUE(s.checks[1].ok());   // V additivity does not involve κ
}

TEST(Suites, RandomBetasSeeded) {
  EXPECT_EQ(random_betas(3, 2, 9), random_betas(3, 2, 9));
  EXPECT_NE(random_betas(3, 2, 9), random_betas(3, 2, 10));
  for (const auto& b : random_betas(4, 10, 1))
    for (double v : b.values) EXPECT_LE(std::abs(v), std::numbers::pi);
}

TEST(Suites, JsonShape) {
  const auto c = two_object_example();
  const auto j = to_json(category_suite(c));
  EXPECT_EQ(j["suite"], "category");
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["checks"][0]["law"], "category_axioms");
}
