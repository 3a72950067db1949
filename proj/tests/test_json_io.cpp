#include <gtest/gtest.h>

#include "catquant/generators.hpp"
#include "catquant/json_io.hpp"
#include "catquant/representation.hpp"

using namespace catquant;

TEST(JsonIo, MatrixRoundTripUsesPairs) {
  ComplexMatrix m(1, 2);
  m(0, 0) = Complex(1, -2);
  const auto j = matrix_to_json(m);
  EXPECT_EQ(j["entries"][0], nlohmann::json::array({1.0, -2.0}));
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[[1,0]]]})")), ParseError);
}

TEST(JsonIo, CategoryRoundTripBuiltIns) {
  for (const auto& c : {two_object_example(false), two_object_example(true), four_causal_sets_category(),
                        five_object_example(), chain_category(4),
                        topology_category({FiniteTopology::discrete("D", {"x", "y"})})}) {
    const auto j = category_to_json(c);
    EXPECT_EQ(category_from_json(j), c) << c.name();
    EXPECT_EQ(category_from_json(json::parse(j.dump())), c) << c.name();
  }
  EXPECT_EQ(category_to_json(two_object_example())["composition"], "derived");
  EXPECT_TRUE(category_to_json(five_object_example())["composition"].is_array());
}

TEST(JsonIo, CategoryErrorsCarryLocation) {
  const auto bad = json::parse(R"({"objects":[{"name":"A"}],
    "arrows":[{"name":"id_A","dom":"A","cod":"X"}], "composition":[]})");
  try {
    category_from_json(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("arrows[0].cod"), std::string::npos) << e.what();
  }
  EXPECT_THROW(category_from_json(json::parse(R"({"arrows":[]})")), ParseError);
}

TEST(JsonIo, IdentitiesInferredWhenOmitted) {
  const auto doc = json::parse(R"({"name":"tiny","objects":[{"name":"A"}],
    "arrows":[{"name":"one","dom":"A","cod":"A"}],
    "composition":[{"g":"one","f":"one","gf":"one"}]})");
  const auto c = category_from_json(doc);
  EXPECT_EQ(c.arrow(c.identity(ObjectId{0})).name, "one");
  EXPECT_TRUE(validate_category(c).ok());
}

TEST(JsonIo, ElementMapCategoryDerived) {
  const auto doc = json::parse(R"({"objects":[{"name":"P","elements":["x","y"]}],
    "arrows":[{"name":"id","dom":"P","cod":"P","map":["x","y"]},
              {"name":"sw","dom":"P","cod":"P","map":["y","x"]}],
    "composition":"derived"})");
  const auto c = category_from_json(doc);
  EXPECT_EQ(c.arrow(c.composite(c.arrow_named("sw"), c.arrow_named("sw"))).name, "id");
}

TEST(JsonIo, PresheafFieldBetaRoundTrip) {
  const auto c = two_object_example();
  const auto p = set_presheaf(c);
  const auto q = presheaf_from_json(c, presheaf_to_json(c, p));
  EXPECT_EQ(q.dims, p.dims);
  EXPECT_EQ(q.kappa, p.kappa);
  const auto x = delta_field(c, c.arrow_named("s"));
  EXPECT_EQ(field_from_json(c, field_to_json(c, x)), x);
  const ConfigFunction b{{0.25, -3.0}};
  EXPECT_EQ(beta_from_json(c, beta_to_json(c, b)), b);
  EXPECT_THROW(field_from_json(c, json::parse(R"({"assignment":{"A":"g","B":"id_B"}})")), Error);
  EXPECT_THROW(beta_from_json(c, json::parse(R"({"beta":{"A":1}})")), ParseError);
}

TEST(JsonIo, GeneratorInputs) {
  const auto posets = posets_from_json(json::parse(R"({"posets":[{"name":"V","elements":["a","b","c"],
    "leq":[["a","b"],["a","c"]]}]})"));
  ASSERT_EQ(posets.size(), 1u);
  EXPECT_TRUE(posets[0].problems().empty());
  EXPECT_EQ(posets[0].leq.size(), 5u);
  const auto spaces = topologies_from_json(json::parse(R"({"spaces":[{"name":"S","points":["o","c"],
    "opens":[[],["o"],["o","c"]]}]})"));
  EXPECT_EQ(spaces[0].opens.size(), 3u);
  const auto ga = group_action_from_json(json::parse(R"({"group":{"elements":["e","t"],
    "table":[["e","t"],["t","e"]]},"carrier":["u","v"],"action":[["u","v"],["v","u"]]})"));
  EXPECT_TRUE(ga.problems().empty());
  EXPECT_THROW(posets_from_json(json::parse(R"({"posets":[{"name":"V","elements":["a"],"leq":[["a","z"]]}]})")),
               ParseError);
}
