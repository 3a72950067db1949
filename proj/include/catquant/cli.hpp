#pragma once

// Command implementations behind the `catquant` executable. Each command
// returns the process exit code: 0 success, 1 law violation, 2 input error.

#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "catquant/arrow_field.hpp"
#include "catquant/category.hpp"
#include "catquant/checks.hpp"
#include "catquant/generators.hpp"
#include "catquant/json_io.hpp"
#include "catquant/presheaf.hpp"
#include "catquant/representation.hpp"

namespace catquant::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kLawViolation = 1, kInputError = 2 };

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Plumbing

/// Enumeration cap from CATQUANT_CAP when set, else `fallback`.
inline std::size_t env_cap(std::size_t fallback) {
  if (const char* v = std::getenv("CATQUANT_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw ParseError(std::string("CATQUANT_CAP is not a number: ") + v);
    }
  }
  return fallback;
}

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Writes through a temporary sibling and renames it into place.
inline void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot write " + tmp.string());
    os << content;
    if (!os) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

inline std::string read_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

/// A loaded input: its value plus the bytes it was read from, for digests.
template <class T>
struct Loaded {
  T value;
  std::string source;
  std::string bytes;
};

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"isham-2obj", "isham-2obj-unordered", "two-object",
                                              "two-object-unordered", "fig1", "fig1-injective",
                                              "fig2", "chain-<N>"};
  return names;
}

inline std::optional<FiniteCategory> builtin_category(const std::string& name) {
  if (name == "isham-2obj" || name == "two-object") return two_object_example(false);
  if (name == "isham-2obj-unordered" || name == "two-object-unordered") return two_object_example(true);
  if (name == "fig1") return four_causal_sets_category(ArrowMode::all_monotone);
  if (name == "fig1-injective") return four_causal_sets_category(ArrowMode::injective_monotone);
  if (name == "fig2") return five_object_example();
  if (name.rfind("chain-", 0) == 0) {
    try {
      const auto n = std::stoull(name.substr(6));
      if (n >= 1) return chain_category(static_cast<std::size_t>(n));
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

/// A path to a category document, or the name of a built-in example.
inline Loaded<FiniteCategory> load_category(const std::string& arg) {
  if (fs::is_regular_file(arg)) {
    auto bytes = read_file(arg);
    return {category_from_json(parse_json_text(bytes, arg)), arg, bytes};
  }
  if (auto cat = builtin_category(arg)) return {*cat, "builtin:" + arg, category_to_json(*cat).dump(2)};
  throw ParseError("'" + arg + "' is neither a readable file nor a built-in example");
}

/// "set", "trivial", or a path to a presheaf document. Empty picks "set" when
/// every object carries an element set, else "trivial".
inline Loaded<HilbertPresheaf> load_presheaf(const FiniteCategory& cat, std::string arg) {
  if (arg.empty()) arg = cat.has_element_maps() ? "set" : "trivial";
  if (arg == "set") {
    try {
      auto p = set_presheaf(cat);
      return {p, "set", presheaf_to_json(cat, p).dump()};
    } catch (const StructuralError& e) {
      throw ParseError(std::string("set presheaf: ") + e.what());
    }
  }
  if (arg == "trivial") {
    auto p = trivial_presheaf(cat);
    return {p, "trivial", presheaf_to_json(cat, p).dump()};
  }
  auto bytes = read_file(arg);
  return {presheaf_from_json(cat, parse_json_text(bytes, arg)), arg, bytes};
}

inline std::string format_scalar(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12);
  if (z.imag() == 0.0) {
    os << z.real();
  } else if (z.real() == 0.0) {
    os << z.imag() << "i";
  } else {
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

inline std::string format_matrix(const ComplexMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& z : m.entries()) {
    cells.push_back(format_scalar(z));
    width = std::max(width, cells.back().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(width)) << cells[r * m.cols() + c];
    os << "]\n";
  }
  return os.str();
}

/// Tracks emitted files and writes manifest.json into the output directory.
class Emitter {
 public:
  Emitter(fs::path dir, std::string command) : dir_(std::move(dir)), command_(std::move(command)) {}

  void input(const std::string& name, const std::string& bytes) {
    inputs_.push_back({{"name", name}, {"sha256", sha256_hex(bytes)}});
  }

  void emit(const std::string& file, const std::string& content) {
    write_file_atomic(dir_ / file, content);
    files_.push_back(file);
  }
  void emit_json(const std::string& file, const json& j) { emit(file, j.dump(2) + "\n"); }

  fs::path finish() {
    json m{{"command", command_},
           {"tool_version", kToolVersion},
           {"timestamp", utc_timestamp()},
           {"inputs", inputs_},
           {"emitted", files_}};
    write_file_atomic(dir_ / "manifest.json", m.dump(2) + "\n");
    return dir_ / "manifest.json";
  }

  const std::vector<std::string>& files() const noexcept { return files_; }

 private:
  fs::path dir_;
  std::string command_;
  json inputs_ = json::array();
  std::vector<std::string> files_;
};

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise CATQUANT_CAP or pass --sample N)\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const StructuralError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

inline void emit_report(std::ostream& out, const json& report, const std::optional<std::string>& json_path) {
  if (!json_path) return;
  if (*json_path == "-")
    out << report.dump(2) << "\n";
  else
    write_file_atomic(*json_path, report.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// validate

struct ValidateOptions {
  std::string category;
  std::optional<std::string> presheaf;
  std::optional<std::string> json_out;  // "-" for stdout
};

inline int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cat = load_category(opt.category);
    const auto rep = validate_category(cat.value);
    json report{{"command", "validate"}, {"input", cat.source}, {"category_ok", rep.ok()}};
    json violations = json::array();
    for (const auto& v : rep.violations) {
      json arrows = json::array();
      for (auto f : v.arrows) arrows.push_back(cat.value.arrow(f).name);
      violations.push_back({{"kind", to_string(v.kind)}, {"arrows", arrows}, {"message", v.message}});
    }
    report["violations"] = violations;
    bool ok = rep.ok();

    std::ostringstream text;
    text << "category " << cat.source << ": " << cat.value.object_count() << " objects, " << cat.value.arrow_count()
         << " arrows\n";
    for (const auto& v : rep.violations) text << "  violation [" << to_string(v.kind) << "] " << v.message << "\n";
    text << (rep.ok() ? "  category axioms: OK\n" : "  category axioms: FAILED\n");

    if (opt.presheaf) {
      const auto p = load_presheaf(cat.value, *opt.presheaf);
      const auto prep = validate_presheaf(cat.value, p.value);
      if (!prep.shape_errors.empty()) {
        for (const auto& e : prep.shape_errors) err << "input error: presheaf " << e << "\n";
        return static_cast<int>(kInputError);
      }
      json pairs = json::array();
      for (auto [f, g] : prep.violating_pairs) pairs.push_back({cat.value.arrow(f).name, cat.value.arrow(g).name});
      report["presheaf"] = {{"source", p.source},
                            {"ok", prep.ok()},
                            {"identity", to_json(prep.identity)},
                            {"functoriality", to_json(prep.functoriality)},
                            {"violating_pairs", pairs}};
      text << "presheaf " << p.source << ": " << (prep.ok() ? "OK" : "FAILED") << " (" << prep.functoriality.checked
           << " composable pairs, " << prep.functoriality.failed << " violations)\n";
      if (!prep.identity.ok()) text << "  " << prep.identity.first_failure << "\n";
      if (!prep.functoriality.ok()) text << "  " << prep.functoriality.first_failure << "\n";
      ok = ok && prep.ok();
    }
    report["ok"] = ok;
    if (opt.json_out != std::optional<std::string>("-")) out << text.str();
    emit_report(out, report, opt.json_out);
    return static_cast<int>(ok ? kSuccess : kLawViolation);
  });
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string kind;  // poset | topology | group | chain | fig1 | fig2 | isham-2obj
  std::optional<std::string> input;
  std::size_t n = 1;
  bool injective = false;
  bool forget_order = false;
  std::optional<std::string> output;
};

inline FiniteCategory generate(const GenOptions& opt) {
  const std::size_t cap = env_cap(kDefaultMapCap);
  auto need_input = [&]() -> json {
    if (!opt.input) throw ParseError("gen " + opt.kind + " needs --input FILE");
    return parse_json_text(read_file(*opt.input), *opt.input);
  };
  const ArrowMode mode = opt.injective ? ArrowMode::injective_monotone : ArrowMode::all_monotone;
  if (opt.kind == "poset") return poset_category(posets_from_json(need_input()), mode, cap);
  if (opt.kind == "topology") return topology_category(topologies_from_json(need_input()), cap);
  if (opt.kind == "group") return group_action_category(group_action_from_json(need_input()));
  if (opt.kind == "chain") {
    if (opt.n < 1) throw ParseError("chain needs --n >= 1");
    return chain_category(opt.n);
  }
  if (opt.kind == "fig1") return poset_category(four_causal_sets(), mode, cap, "fig1");
  if (opt.kind == "fig2") return five_object_example();
  if (opt.kind == "isham-2obj" || opt.kind == "two-object") return two_object_example(opt.forget_order);
  throw ParseError("unknown generator '" + opt.kind + "'");
}

inline int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = category_to_json(generate(opt)).dump(2) + "\n";
    if (opt.output)
      write_file_atomic(*opt.output, doc);
    else
      out << doc;
    return static_cast<int>(kSuccess);
  });
}

// ---------------------------------------------------------------------------
// rep

struct RepOptions {
  std::string category;
  std::string presheaf;  // set | trivial | path | "" (auto)
  std::optional<std::string> field_file;
  std::optional<std::string> delta;
  bool iota = false;
  std::optional<std::string> beta_file;
  std::optional<std::string> emit_dir;
  bool check = false;
  std::optional<std::string> json_out;
};

inline int cmd_rep(const RepOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int chosen = (opt.field_file ? 1 : 0) + (opt.delta ? 1 : 0) + (opt.iota ? 1 : 0);
    if (chosen != 1) throw ParseError("give exactly one of --field FILE, --delta ARROW, --iota");
    const auto cat = load_category(opt.category);
    const auto& c = cat.value;
    const auto p = load_presheaf(c, opt.presheaf);
    if (auto errs = presheaf_shape_errors(c, p.value); !errs.empty()) throw ParseError("presheaf: " + errs.front());

    ArrowField x;
    std::string field_label;
    std::optional<std::string> field_bytes;
    if (opt.iota) {
      x = identity_field(c);
      field_label = "iota";
    } else if (opt.delta) {
      const auto f = c.find_arrow(*opt.delta);
      if (!f) throw ParseError("--delta: unknown arrow '" + *opt.delta + "'");
      x = delta_field(c, *f);
      field_label = "X_" + *opt.delta;
    } else {
      field_bytes = read_file(*opt.field_file);
      x = field_from_json(c, parse_json_text(*field_bytes, *opt.field_file));
      field_label = describe_field(c, x);
    }
    std::optional<ConfigFunction> beta;
    std::string beta_bytes;
    if (opt.beta_file) {
      beta_bytes = read_file(*opt.beta_file);
      beta = beta_from_json(c, parse_json_text(beta_bytes, *opt.beta_file));
    }

    const auto a = a_op(c, p.value, x);
    std::map<std::string, ComplexMatrix> mats{{"a", a.matrix()},
                                              {"a_dagger", adjoint(a).matrix()},
                                              {"alpha", alpha_op(c, p.value, x).matrix()},
                                              {"beta_mom", beta_mom_op(c, p.value, x).matrix()}};
    if (beta) {
      mats["v"] = v_op(p.value, *beta).matrix();
      mats["beta_hat"] = beta_hat_op(p.value, *beta).matrix();
    }

    out << "a(" << field_label << ") on " << cat.source << " with " << p.source << " presheaf (dim "
        << p.value.total_dim() << "):\n"
        << format_matrix(a.matrix());
    if (beta) out << "V(beta):\n" << format_matrix(mats["v"]) << "beta_hat:\n" << format_matrix(mats["beta_hat"]);

    if (opt.emit_dir) {
      Emitter em(*opt.emit_dir, "rep");
      em.input(cat.source, cat.bytes);
      em.input("presheaf:" + p.source, p.bytes);
      if (field_bytes) em.input(*opt.field_file, *field_bytes);
      if (opt.beta_file) em.input(*opt.beta_file, beta_bytes);
      for (const auto& [name, m] : mats) em.emit_json(name + ".json", matrix_to_json(m));
      out << "wrote " << em.files().size() << " matrices and " << em.finish().string() << "\n";
    }

    if (!opt.check) return static_cast<int>(kSuccess);
    CheckOptions copt;
    copt.tol = kDefaultTolerance;
    const std::vector<ArrowField> fields{identity_field(c), x};
    std::vector<SuiteResult> suites{presheaf_suite(c, p.value),
                                    multiplier_suite(c, p.value, fields, copt.tol),
                                    homomorphism_suite(c, p.value, fields, copt),
                                    adjoint_suite(c, p.value, fields, copt.tol),
                                    momentum_suite(c, p.value, copt.tol),
                                    separation_suite(c, p.value, copt.tol),
                                    connectedness_suite(c, p.value, fields)};
    bool ok = true;
    json report = json::array();
    for (const auto& s : suites) {
      out << (s.ok() ? "[PASS] " : "[FAIL] ") << s.name << "\n";
      for (const auto& n : s.notes) out << "       " << n << "\n";
      ok = ok && s.ok();
      report.push_back(to_json(s));
    }
    emit_report(out, json{{"command", "rep"}, {"suites", report}, {"ok", ok}}, opt.json_out);
    return static_cast<int>(ok ? kSuccess : kLawViolation);
  });
}

// ---------------------------------------------------------------------------
// check

struct CheckCmdOptions {
  std::string category;
  std::string presheaf;
  std::vector<std::string> suites;  // empty: all
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  std::optional<std::string> json_out;
};

inline void print_suite(std::ostream& out, const SuiteResult& s) {
  out << (s.ok() ? "[PASS] " : "[FAIL] ") << s.name << "\n";
  for (const auto& c : s.checks) {
    out << "       " << std::left << std::setw(34) << c.law << std::right << c.checked - c.failed << "/" << c.checked;
    if (!c.ok()) out << "  first failure: " << c.first_failure;
    out << "\n";
  }
  for (const auto& n : s.notes) out << "       note: " << n << "\n";
}

inline int cmd_check(const CheckCmdOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cat = load_category(opt.category);
    const auto p = load_presheaf(cat.value, opt.presheaf);
    CheckOptions copt;
    copt.field_cap = env_cap(kDefaultFieldCap);
    copt.sample = opt.sample;
    copt.seed = opt.seed;
    const auto suites = run_suites(cat.value, p.value, opt.suites, copt);
    bool ok = true;
    json jsuites = json::array();
    const bool text = opt.json_out != std::optional<std::string>("-");
    if (text) out << "check " << cat.source << " with " << p.source << " presheaf\n";
    for (const auto& s : suites) {
      if (text) print_suite(out, s);
      ok = ok && s.ok();
      jsuites.push_back(to_json(s));
    }
    if (text) out << (ok ? "all suites passed\n" : "some suites FAILED\n");
    emit_report(out,
                json{{"command", "check"},
                     {"category", cat.source},
                     {"presheaf", p.source},
                     {"seed", opt.seed},
                     {"suites", jsuites},
                     {"ok", ok}},
                opt.json_out);
    return static_cast<int>(ok ? kSuccess : kLawViolation);
  });
}

// ---------------------------------------------------------------------------
// example

struct ExampleOptions {
  std::string name;
  std::size_t n = 6;
  std::optional<std::string> out_dir;
};

/// The two-object operators in the (ψ_A; ψ_b1, ψ_b2) basis, with β = (1, 2)
/// for the configuration operator.
inline std::vector<std::pair<std::string, ComplexMatrix>> two_object_reference_matrices() {
  return {{"a_f1", {{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}}, {"a_f2", {{0, 0, 1}, {0, 1, 0}, {0, 0, 1}}},
          {"a_g", {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}},  {"a_r", {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}},
          {"a_s", {{1, 0, 0}, {0, 0, 1}, {0, 0, 1}}},  {"beta_hat", {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}},
          {"a_p", {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}};
}

namespace detail {

struct Outcome {
  std::string what;
  bool pass;
};

inline int finish_example(Emitter& em, std::ostream& out, const std::string& name, const std::vector<Outcome>& results,
                          json extra = json::object()) {
  bool ok = true;
  json lines = json::array();
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.what << "\n";
    lines.push_back({{"check", r.what}, {"pass", r.pass}});
    ok = ok && r.pass;
  }
  extra["example"] = name;
  extra["checks"] = lines;
  extra["ok"] = ok;
  em.emit_json("report.json", extra);
  out << "manifest: " << em.finish().string() << "\n";
  return ok ? kSuccess : kLawViolation;
}

inline int example_two_object(Emitter& em, std::ostream& out) {
  const auto cat = two_object_example(false);
  const auto unordered = two_object_example(true);
  const auto p = set_presheaf(cat);
  const auto pu = set_presheaf(unordered);
  em.input("builtin:isham-2obj", category_to_json(cat).dump(2));
  em.input("builtin:isham-2obj-unordered", category_to_json(unordered).dump(2));
  std::vector<Outcome> results;
  for (const auto& [name, expected] : two_object_reference_matrices()) {
    ComplexMatrix got;
    if (name == "beta_hat") {
      got = beta_hat_op(p, ConfigFunction{{1.0, 2.0}}).matrix();
    } else if (name == "a_p") {
      got = a_op(unordered, pu, delta_field(unordered, unordered.arrow_named("p"))).matrix();
    } else {
      got = a_op(cat, p, delta_field(cat, cat.arrow_named(name.substr(2)))).matrix();
    }
    em.emit_json(name + ".json", matrix_to_json(got));
    out << name << ":\n" << format_matrix(got);
    results.push_back({name + " matches the reference matrix exactly", got == expected});
  }
  return finish_example(em, out, "isham-2obj", results);
}

inline int example_fig1(Emitter& em, std::ostream& out) {
  const auto cat = four_causal_sets_category(ArrowMode::all_monotone);
  const auto p = set_presheaf(cat);
  em.input("builtin:fig1", category_to_json(cat).dump(2));
  em.emit_json("category.json", category_to_json(cat));
  json homs = json::object();
  out << "hom-set sizes (row = domain):\n";
  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    out << "  " << cat.object(ObjectId{a}).name << ":";
    for (std::size_t b = 0; b < cat.object_count(); ++b) {
      const auto k = hom_set(cat, ObjectId{a}, ObjectId{b}).size();
      homs[cat.object(ObjectId{a}).name][cat.object(ObjectId{b}).name] = k;
      out << " " << std::setw(3) << k;
    }
    out << "\n";
  }
  const auto comps = connected_components(cat);
  const auto commutant = commutant_dimension(cat, p, true);
  out << "arrow fields: " << count_arrow_fields(cat) << "; commutant dimension (with adjoints): " << commutant << "\n";
  std::vector<Outcome> results{
      {"category axioms hold", validate_category(cat).ok()},
      {"pull-back presheaf is functorial", validate_presheaf(cat, p).ok()},
      {"multiplier condition holds for every (object, X1(A), X2(rho A))", multiplier_check_local(cat, p).ok()},
      {"objects form one connected component", comps.size() == 1},
  };
  return finish_example(em, out, "fig1", results,
                        {{"hom_sizes", homs}, {"arrow_fields", count_arrow_fields(cat)}, {"commutant_dimension", commutant}});
}

inline int example_fig2(Emitter& em, std::ostream& out) {
  const auto cat = five_object_example();
  const auto p = trivial_presheaf(cat);
  em.input("builtin:fig2", category_to_json(cat).dump(2));
  const auto x = make_field(cat, {cat.arrow_named("x1"), cat.arrow_named("x2"), cat.arrow_named("x3"),
                                  cat.arrow_named("y"), cat.arrow_named("id_C")});
  const auto a = a_op(cat, p, x);
  const auto ad = adjoint(a);
  em.emit_json("field.json", field_to_json(cat, x));
  em.emit_json("a.json", matrix_to_json(a.matrix()));
  em.emit_json("a_dagger.json", matrix_to_json(ad.matrix()));
  auto ket = [&](const char* n) { return basis_section(p, cat.object_named(n)); };
  auto sum = [](std::initializer_list<Section> ks) {
    Section s(ks.begin()->size());
    for (const auto& k : ks)
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += k[i];
    return s;
  };
  const Section zero(cat.object_count());
  Section diff = ket("A1");
  diff[cat.object_named("A2").index] = -1.0;
  Section three_b = ket("B");
  three_b[cat.object_named("B").index] = 3.0;
  std::vector<Outcome> results{
      {"a^dagger|A1> = |B>", ad.apply(ket("A1")) == ket("B")},
      {"a^dagger|A2> = |B>", ad.apply(ket("A2")) == ket("B")},
      {"a^dagger|A3> = |B>", ad.apply(ket("A3")) == ket("B")},
      {"a^dagger|B> = |C>", ad.apply(ket("B")) == ket("C")},
      {"a^dagger|C> = |C>", ad.apply(ket("C")) == ket("C")},
      {"a|A1> = 0", a.apply(ket("A1")) == zero},
      {"a|A2> = 0", a.apply(ket("A2")) == zero},
      {"a|A3> = 0", a.apply(ket("A3")) == zero},
      {"a|B> = |A1> + |A2> + |A3>", a.apply(ket("B")) == sum({ket("A1"), ket("A2"), ket("A3")})},
      {"a|C> = |B> + |C>", a.apply(ket("C")) == sum({ket("B"), ket("C")})},
      {"a^dagger(|A1> - |A2>) = 0", ad.apply(diff) == zero},
      {"a^dagger a|B> = 3|B>", (ad * a).apply(ket("B")) == three_b},
  };
  out << "a(X):\n" << format_matrix(a.matrix());
  return finish_example(em, out, "fig2", results);
}

inline int example_chain(Emitter& em, std::ostream& out, std::size_t n) {
  if (n < 3) throw ParseError("chain example needs --n >= 3");
  const auto cat = chain_category(n);
  const auto p = trivial_presheaf(cat);
  em.input("builtin:chain-" + std::to_string(n), category_to_json(cat).dump(2));
  std::vector<ArrowId> shift;
  for (std::size_t k = 0; k < n; ++k) {
    const auto to = std::to_string(k + 1 < n ? k + 1 : k);
    shift.push_back(cat.arrow_named(k + 1 < n ? std::to_string(k) + "->" + to : "id_" + to));
  }
  const auto x = make_field(cat, shift);
  const auto alpha = alpha_op(cat, p, x);
  const auto beta = beta_mom_op(cat, p, x);
  em.emit_json("a.json", matrix_to_json(a_op(cat, p, x).matrix()));
  em.emit_json("alpha.json", matrix_to_json(alpha.matrix()));
  em.emit_json("beta_mom.json", matrix_to_json(beta.matrix()));
  auto ket = [&](std::size_t k) { return basis_section(p, ObjectId{k}); };
  std::vector<Outcome> results;
  {
    Section expect(n);
    expect[1] = Complex(0.0, 0.5);
    results.push_back({"beta|0> = (i/2)|1>", beta.apply(ket(0)) == expect});
  }
  bool alpha_ok = true, beta_ok = true;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    Section ea(n), eb(n);
    ea[k - 1] = 0.5;
    ea[k + 1] = 0.5;
    eb[k - 1] = Complex(0.0, -0.5);  // 1/(2i)
    eb[k + 1] = Complex(0.0, 0.5);
    alpha_ok = alpha_ok && alpha.apply(ket(k)) == ea;
    beta_ok = beta_ok && beta.apply(ket(k)) == eb;
  }
  results.push_back({"alpha|n> = (|n-1> + |n+1>)/2 for 0 < n < N-1", alpha_ok});
  results.push_back({"beta|n> = (1/2i)(|n-1> - |n+1>) for 0 < n < N-1", beta_ok});
  out << "alpha:\n" << format_matrix(alpha.matrix()) << "beta:\n" << format_matrix(beta.matrix());
  return finish_example(em, out, "chain", results);
}

}  // namespace detail

inline int cmd_example(const ExampleOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string dir = opt.out_dir.value_or("example-" + opt.name);
    Emitter em(dir, "example " + opt.name);
    if (opt.name == "isham-2obj" || opt.name == "two-object") return detail::example_two_object(em, out);
    if (opt.name == "fig1") return detail::example_fig1(em, out);
    if (opt.name == "fig2") return detail::example_fig2(em, out);
    if (opt.name == "chain") return detail::example_chain(em, out, opt.n);
    throw ParseError("unknown example '" + opt.name + "' (isham-2obj, fig1, fig2, chain)");
  });
}

}  // namespace catquant::cli
