#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "catquant/cli.hpp"

using namespace catquant::cli;

int main(int argc, char** argv) {
  CLI::App app{"catquant: finite categories, arrow-field monoids and their operator representations"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ValidateOptions vopt;
  auto* validate = app.add_subcommand("validate", "Check category axioms and, optionally, presheaf functoriality");
  validate->add_option("category", vopt.category, "Category JSON file or built-in name")->required();
  validate->add_option("--presheaf", vopt.presheaf, "set | trivial | presheaf JSON file");
  validate->add_option("--json", vopt.json_out, "Write the JSON report here ('-' for stdout)");

  GenOptions gopt;
  auto* gen = app.add_subcommand("gen", "Generate a category document");
  gen->add_option("kind", gopt.kind, "poset | topology | group | chain | fig1 | fig2 | isham-2obj")->required();
  gen->add_option("--input", gopt.input, "Generator input JSON");
  gen->add_option("--n", gopt.n, "Chain length");
  gen->add_flag("--injective", gopt.injective, "Keep only injective monotone maps");
  gen->add_flag("--forget-order", gopt.forget_order, "Two-object example with B as an antichain");
  gen->add_option("-o,--output", gopt.output, "Output file (default stdout)");

  RepOptions ropt;
  auto* rep = app.add_subcommand("rep", "Build the operators of an arrow field");
  rep->add_option("category", ropt.category, "Category JSON file or built-in name")->required();
  rep->add_option("--presheaf", ropt.presheaf, "set | trivial | presheaf JSON file");
  rep->add_option("--field", ropt.field_file, "Arrow field JSON file");
  rep->add_option("--delta", ropt.delta, "Use the delta field of this arrow");
  rep->add_flag("--iota", ropt.iota, "Use the identity field");
  rep->add_option("--beta", ropt.beta_file, "Configuration function JSON file");
  rep->add_option("--emit", ropt.emit_dir, "Write matrices and a manifest into this directory");
  rep->add_flag("--check", ropt.check, "Run the law suites on this field");
  rep->add_option("--json", ropt.json_out, "Write the check report here ('-' for stdout)");

  CheckCmdOptions copt;
  bool all = false;
  auto* check = app.add_subcommand("check", "Run law suites");
  check->add_option("category", copt.category, "Category JSON file or built-in name")->required();
  check->add_option("--presheaf", copt.presheaf, "set | trivial | presheaf JSON file");
  check->add_flag("--all", all, "Run every suite (the default)");
  check->add_option("--suite", copt.suites, "Suite name (repeatable)")->check(CLI::IsMember(catquant::suite_names()));
  check->add_option("--sample", copt.sample, "Sample this many arrow fields instead of enumerating");
  check->add_option("--seed", copt.seed, "Seed for sampling and random configuration functions");
  check->add_option("--json", copt.json_out, "Write the JSON report here ('-' for stdout)");

  ExampleOptions eopt;
  auto* example = app.add_subcommand("example", "Reproduce a worked example");
  example->add_option("name", eopt.name, "isham-2obj | fig1 | fig2 | chain")->required();
  example->add_option("--n", eopt.n, "Chain length");
  example->add_option("-o,--out", eopt.out_dir, "Output directory (default example-<name>)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*validate) return cmd_validate(vopt, std::cout, std::cerr);
  if (*gen) return cmd_gen(gopt, std::cout, std::cerr);
  if (*rep) return cmd_rep(ropt, std::cout, std::cerr);
  if (*check) {
    if (all) copt.suites.clear();
    return cmd_check(copt, std::cout, std::cerr);
  }
  if (*example) return cmd_example(eopt, std::cout, std::cerr);
  return kInputError;
}
