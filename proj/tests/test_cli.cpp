#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "catquant/cli.hpp"

using namespace catquant;
using namespace catquant::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("catquant-cli-test-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& s) {
  std::ofstream(p) << s;
}

json read_json(const fs::path& p) { return json::parse(read_file(p)); }

int run_exe(const std::string& args) {
  const std::string cmd = std::string(CATQUANT_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, ValidateBuiltinAndCorruptedFile) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_validate({"isham-2obj", "set", std::nullopt}, out, err), kSuccess);
  EXPECT_NE(out.str().find("category axioms: OK"), std::string::npos);

  const auto dir = scratch("validate");
  const auto c = two_object_example();
  const auto bad = c.with_composite(c.arrow_named("r"), c.arrow_named("s"), c.arrow_named("id_B"));
  write(dir / "bad.json", category_to_json(bad).dump());
  std::ostringstream o2, e2;
  EXPECT_EQ(cmd_validate({(dir / "bad.json").string(), std::nullopt, (dir / "report.json").string()}, o2, e2),
            kLawViolation);
  const auto rep = read_json(dir / "report.json");
  EXPECT_EQ(rep["ok"], false);
  EXPECT_GT(rep["violations"].size(), 0u);
  EXPECT_EQ(rep["violations"][0]["kind"], "associativity");
}

TEST(Cli, ValidateInputErrors) {
  const auto dir = scratch("validate-errors");
  write(dir / "broken.json", "{ not json");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_validate({(dir / "broken.json").string(), std::nullopt, std::nullopt}, out, err), kInputError);
  EXPECT_EQ(cmd_validate({"no-such-thing", std::nullopt, std::nullopt}, out, err), kInputError);
  // Presheaf with a wrongly shaped κ is an input error, not a law violation.
  const auto c = two_object_example();
  auto p = set_presheaf(c);
  p.kappa[c.arrow_named("g").index] = ComplexMatrix{{1, 1}};
  write(dir / "p.json", presheaf_to_json(c, p).dump());
  EXPECT_EQ(cmd_validate({"isham-2obj", (dir / "p.json").string(), std::nullopt}, out, err), kInputError);
  // A swapped κ(r) is well shaped but not functorial.
  auto q = set_presheaf(c);
  q.kappa[c.arrow_named("r").index] = ComplexMatrix{{0, 1}, {1, 0}};
  write(dir / "q.json", presheaf_to_json(c, q).dump());
  EXPECT_EQ(cmd_validate({"isham-2obj", (dir / "q.json").string(), std::nullopt}, out, err), kLawViolation);
}

TEST(Cli, GenIsDeterministicAndRoundTrips) {
  const auto dir = scratch("gen");
  GenOptions g;
  g.kind = "fig1";
  g.output = (dir / "a.json").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_gen(g, out, err), kSuccess);
  g.output = (dir / "b.json").string();
  ASSERT_EQ(cmd_gen(g, out, err), kSuccess);
  EXPECT_EQ(read_file(dir / "a.json"), read_file(dir / "b.json"));
  EXPECT_EQ(category_from_json(read_json(dir / "a.json")), four_causal_sets_category());
  EXPECT_EQ(cmd_validate({(dir / "a.json").string(), "set", std::nullopt}, out, err), kSuccess);
}

TEST(Cli, GenFromInputs) {
  const auto dir = scratch("gen-inputs");
  write(dir / "posets.json", R"({"posets":[{"name":"V","elements":["a","b","c"],"leq":[["a","b"],["a","c"]]},
                                            {"name":"P","elements":["p"]}]})");
  GenOptions g;
  g.kind = "poset";
  g.input = (dir / "posets.json").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_gen(g, out, err), kSuccess) << err.str();
  const auto c = category_from_json(json::parse(out.str()));
  EXPECT_TRUE(validate_category(c).ok());
  EXPECT_EQ(hom_set(c, c.object_named("P"), c.object_named("V")).size(), 3u);

  write(dir / "group.json", R"({"group":{"elements":["e","t"],"table":[["e","t"],["t","e"]]},
                                "carrier":["u","v"],"action":[["u","v"],["v","u"]]})");
  GenOptions h;
  h.kind = "group";
  h.input = (dir / "group.json").string();
  std::ostringstream o2;
  ASSERT_EQ(cmd_gen(h, o2, err), kSuccess);
  EXPECT_EQ(category_from_json(json::parse(o2.str())).arrow_count(), 4u);

  GenOptions missing;
  missing.kind = "poset";
  EXPECT_EQ(cmd_gen(missing, out, err), kInputError);
  GenOptions unknown;
  unknown.kind = "lattice";
  EXPECT_EQ(cmd_gen(unknown, out, err), kInputError);
}

TEST(Cli, CapEnvironmentOverride) {
  GenOptions g;
  g.kind = "fig1";
  std::ostringstream out, err;
  ::setenv("CATQUANT_CAP", "10", 1);
  EXPECT_EQ(cmd_gen(g, out, err), kInputError);
  ::unsetenv("CATQUANT_CAP");
  EXPECT_NE(err.str().find("exceed cap"), std::string::npos) << err.str();
}

TEST(Cli, RepEmitsMatricesAndManifest) {
  const auto dir = scratch("rep");
  write(dir / "beta.json", R"({"beta":{"A":1,"B":2}})");
  RepOptions r;
  r.category = "isham-2obj";
  r.delta = "f1";
  r.beta_file = (dir / "beta.json").string();
  r.emit_dir = (dir / "out").string();
  r.check = true;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_rep(r, out, err), kSuccess) << out.str() << err.str();
  EXPECT_EQ(matrix_from_json(read_json(dir / "out" / "a.json")), (ComplexMatrix{{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(matrix_from_json(read_json(dir / "out" / "beta_hat.json")),
            (ComplexMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  const auto m = read_json(dir / "out" / "manifest.json");
  EXPECT_EQ(m["tool_version"], kToolVersion);
  EXPECT_EQ(m["emitted"].size(), 6u);
  EXPECT_EQ(m["inputs"].size(), 3u);
  EXPECT_EQ(m["inputs"][2]["sha256"], sha256_hex(read_file(dir / "beta.json")));
  EXPECT_FALSE(fs::exists(dir / "out" / "manifest.json.tmp"));

  RepOptions none;
  none.category = "isham-2obj";
  EXPECT_EQ(cmd_rep(none, out, err), kInputError);
  RepOptions bad_arrow;
  bad_arrow.category = "isham-2obj";
  bad_arrow.delta = "zz";
  EXPECT_EQ(cmd_rep(bad_arrow, out, err), kInputError);
}

TEST(Cli, CheckExitCodesAndJson) {
  std::ostringstream out, err;
  CheckCmdOptions c;
  c.category = "fig1";
  EXPECT_EQ(cmd_check(c, out, err), kInputError);
  c.sample = 10;
  c.suites = {"monoid", "multiplier"};
  EXPECT_EQ(cmd_check(c, out, err), kSuccess) << err.str();

  CheckCmdOptions t;
  t.category = "isham-2obj";
  t.presheaf = "trivial";
  t.suites = {"separation"};
  t.json_out = "-";
  std::ostringstream o2;
  EXPECT_EQ(cmd_check(t, o2, err), kLawViolation);
  const auto j = json::parse(o2.str());
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["suites"][0]["suite"], "separation");
}

TEST(Cli, ExamplesSucceed) {
  const auto dir = scratch("examples");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_example({"isham-2obj", 6, (dir / "two").string()}, out, err), kSuccess) << out.str() << err.str();
  const auto m = read_json(dir / "two" / "manifest.json");
  EXPECT_EQ(m["emitted"].size(), 8u);  // seven matrices and the report
  EXPECT_EQ(matrix_from_json(read_json(dir / "two" / "a_p.json")), (ComplexMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(cmd_example({"fig2", 6, (dir / "fig2").string()}, out, err), kSuccess) << out.str();
  EXPECT_EQ(read_json(dir / "fig2" / "report.json")["checks"].size(), 12u);
  EXPECT_EQ(cmd_example({"chain", 6, (dir / "chain").string()}, out, err), kSuccess) << out.str();
  EXPECT_EQ(cmd_example({"fig1", 6, (dir / "fig1").string()}, out, err), kSuccess) << out.str();
  EXPECT_EQ(read_json(dir / "fig1" / "report.json")["commutant_dimension"], 1);
  EXPECT_EQ(cmd_example({"nope", 6, std::nullopt}, out, err), kInputError);
}

TEST(Cli, ExecutableExitCodes) {
  const auto dir = scratch("exe");
  EXPECT_EQ(run_exe("--version"), 0);
  EXPECT_EQ(run_exe("validate isham-2obj"), 0);
  EXPECT_EQ(run_exe("validate /nonexistent.json"), 2);
  EXPECT_EQ(run_exe("frobnicate"), 2);
  EXPECT_EQ(run_exe("check isham-2obj --presheaf trivial --suite separation"), 1);
  EXPECT_EQ(run_exe("check isham-2obj --suite bogus"), 2);
  EXPECT_EQ(run_exe("gen chain --n 3 -o " + (dir / "c3.json").string()), 0);
  EXPECT_EQ(category_from_json(read_json(dir / "c3.json")).arrow_count(), 6u);
  EXPECT_EQ(run_exe("rep chain-3 --iota --emit " + (dir / "rep").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "rep" / "manifest.json"));
}
