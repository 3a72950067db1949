#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "catquant/arrow_field.hpp"
#include "catquant/category.hpp"
#include "catquant/presheaf.hpp"
#include "catquant/report.hpp"
#include "catquant/representation.hpp"

namespace catquant {

/// Outcome of one named group of law checks. `data` carries diagnostic
/// values (counts, dimensions) that are reported but never fail the suite.
struct SuiteResult {
  std::string name;
  std::vector<LawCheck> checks;
  std::vector<std::string> notes;
  nlohmann::json data = nlohmann::json::object();

  bool ok() const { return all_ok(checks); }
};

struct CheckOptions {
  std::size_t field_cap = kDefaultFieldCap;
  std::optional<std::size_t> sample;  // draw this many random fields when AF(Q) exceeds the cap
  std::uint64_t seed = 0;
  std::size_t random_betas = 3;
  double tol = kDefaultTolerance;
  double commutant_tol = 1e-10;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"category",    "monoid",   "presheaf",   "multiplier",
                                              "homomorphism", "adjoint",  "momentum",   "separation",
                                              "connectedness", "commutant"};
  return names;
}

/// All of AF(Q) when it fits under the cap, otherwise a seeded sample when
/// one was requested. Throws CapExceeded otherwise.
inline std::vector<ArrowField> resolve_fields(const FiniteCategory& cat, const CheckOptions& opt) {
  const double count = count_arrow_fields(cat);
  if (count <= static_cast<double>(opt.field_cap)) return enumerate_arrow_fields(cat, opt.field_cap);
  if (opt.sample) {
    auto fields = sample_arrow_fields(cat, *opt.sample, opt.seed);
    fields.push_back(identity_field(cat));
    return fields;
  }
  throw CapExceeded("arrow-field enumeration", count, opt.field_cap);
}

inline std::vector<ConfigFunction> random_betas(std::size_t objects, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<ConfigFunction> out(count);
  for (auto& b : out)
    for (std::size_t a = 0; a < objects; ++a) b.values.push_back(angle(rng));
  return out;
}

inline bool is_trivial_presheaf(const HilbertPresheaf& p) {
  return std::all_of(p.dims.begin(), p.dims.end(), [](std::size_t d) { return d == 1; }) &&
         std::all_of(p.kappa.begin(), p.kappa.end(),
                     [](const ComplexMatrix& k) { return k == ComplexMatrix::identity(1); });
}

// ---------------------------------------------------------------------------

inline SuiteResult category_suite(const FiniteCategory& cat) {
  SuiteResult s{"category", {}, {}, {}};
  const auto rep = validate_category(cat);
  LawCheck axioms("category_axioms");
  axioms.checked = 1;
  axioms.failed = rep.violations.size();
  if (!rep.ok()) axioms.first_failure = rep.violations.front().message;
  s.checks.push_back(axioms);
  s.data["objects"] = cat.object_count();
  s.data["arrows"] = cat.arrow_count();
  s.data["violations"] = rep.violations.size();
  return s;
}

inline SuiteResult monoid_suite(const FiniteCategory& cat, const std::vector<ArrowField>& fields) {
  SuiteResult s{"monoid", {}, {}, {}};
  const auto rep = check_monoid_laws(cat, fields);
  for (const auto& c : rep.checks()) s.checks.push_back(c);
  LawCheck antirep("endo_antirepresentation");
  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    const auto r = endo_antirep_check(cat, ObjectId{a});
    antirep.checked += r.antirep.checked;
    if (!r.antirep.ok() && antirep.ok()) antirep.first_failure = r.antirep.first_failure;
    antirep.failed += r.antirep.failed;
  }
  s.checks.push_back(antirep);
  s.data["fields"] = fields.size();
  s.data["field_count"] = count_arrow_fields(cat);
  return s;
}

inline SuiteResult presheaf_suite(const FiniteCategory& cat, const HilbertPresheaf& p) {
  SuiteResult s{"presheaf", {}, {}, {}};
  const auto rep = validate_presheaf(cat, p);
  LawCheck shape("presheaf_shape");
  shape.checked = 1;
  shape.failed = rep.shape_errors.size();
  if (!rep.shape_errors.empty()) shape.first_failure = rep.shape_errors.front();
  s.checks = {shape, rep.identity, rep.functoriality};
  s.data["total_dim"] = p.total_dim();
  s.data["zero_one"] = all_zero_one(p);
  const auto faithful = endo_faithfulness(cat, p);
  auto& ff = s.data["endo_faithful"] = nlohmann::json::object();
  for (std::size_t a = 0; a < faithful.size(); ++a) ff[cat.object(ObjectId{a}).name] = static_cast<bool>(faithful[a]);
  return s;
}

inline SuiteResult multiplier_suite(const FiniteCategory& cat, const HilbertPresheaf& p,
                                    const std::vector<ArrowField>& fields, double tol) {
  SuiteResult s{"multiplier", {}, {}, {}};
  auto pairs = multiplier_check(cat, p, fields, tol).law;
  pairs.law = "multiplier_cocycle_field_pairs";
  auto local = multiplier_check_local(cat, p, tol).law;
  local.law = "multiplier_cocycle_local";
  s.checks = {pairs, local};
  return s;
}

inline SuiteResult homomorphism_suite(const FiniteCategory& cat, const HilbertPresheaf& p,
                                      const std::vector<ArrowField>& fields, const CheckOptions& opt) {
  SuiteResult s{"homomorphism", {}, {}, {}};
  LawCheck aa("a_product");         // â(X1)â(X2) = â(X1 & X2)
  LawCheck vv("v_additivity");      // V̂(β1)V̂(β2) = V̂(β1 + β2)
  LawCheck av("exchange");          // â(X)V̂(β) = V̂(β∘ρ_X)â(X)
  LawCheck cqm("cqm_product");      // rep(e1)rep(e2) = rep(e1 e2)
  const double exact = all_zero_one(p) ? 0.0 : opt.tol;
  const auto betas = random_betas(cat.object_count(), opt.random_betas, opt.seed);

  std::vector<OperatorMatrix> a;
  a.reserve(fields.size());
  for (const auto& x : fields) a.push_back(a_op(cat, p, x));
  std::vector<OperatorMatrix> v;
  for (const auto& b : betas) v.push_back(v_op(p, b));

  for (std::size_t i = 0; i < betas.size(); ++i)
    for (std::size_t j = 0; j < betas.size(); ++j)
      vv.record(approx_equal(v[i] * v[j], v_op(p, betas[i] + betas[j]), opt.tol),
                [&] { return "V(b" + std::to_string(i) + ")V(b" + std::to_string(j) + ") != V(sum)"; });

  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto r = rho(cat, fields[i]);
    for (std::size_t k = 0; k < betas.size(); ++k)
      av.record(approx_equal(a[i] * v[k], v_op(p, pull_back(betas[k], r)) * a[i], opt.tol),
                [&] { return "exchange relation fails for X=" + describe_field(cat, fields[i]); });
  }

  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const auto x12 = combine(cat, fields[i], fields[j]);
      aa.record(approx_equal(a[i] * a[j], a_op(cat, p, x12), exact), [&] {
        return "a(X1)a(X2) != a(X1&X2) for X1=" + describe_field(cat, fields[i]) + ", X2=" +
               describe_field(cat, fields[j]);
      });
      for (std::size_t k = 0; k < betas.size(); ++k) {
        const CqmElement e1{fields[i], betas[k]};
        const CqmElement e2{fields[j], betas[(k + 1) % betas.size()]};
        cqm.record(approx_equal(cqm_rep(cat, p, e1) * cqm_rep(cat, p, e2), cqm_rep(cat, p, cqm_product(cat, e1, e2)),
                                opt.tol),
                   [&] {
                     return "rep(e1)rep(e2) != rep(e1 e2) for X1=" + describe_field(cat, fields[i]) +
                            ", X2=" + describe_field(cat, fields[j]);
                   });
      }
    }
  s.checks = {aa, vv, av, cqm};
  s.data["fields"] = fields.size();
  s.data["betas"] = betas.size();
  return s;
}

inline SuiteResult adjoint_suite(const FiniteCategory& cat, const HilbertPresheaf& p,
                                 const std::vector<ArrowField>& fields, double tol) {
  SuiteResult s{"adjoint", {}, {}, {}};
  LawCheck self_adj("alpha_beta_self_adjoint");
  LawCheck decomposition("a_equals_alpha_plus_i_beta");
  LawCheck conj("adjoint_inner_product");
  for (const auto& x : fields) {
    const auto a = a_op(cat, p, x);
    const auto al = alpha_op(cat, p, x);
    const auto be = beta_mom_op(cat, p, x);
    self_adj.record(approx_equal(al, al.adjoint(), tol) && approx_equal(be, be.adjoint(), tol),
                    [&] { return "alpha/beta not self-adjoint for X=" + describe_field(cat, x); });
    decomposition.record(approx_equal(al + Complex(0.0, 1.0) * be, a, tol),
                         [&] { return "a != alpha + i beta for X=" + describe_field(cat, x); });
    // ⟨e_r, â e_c⟩ = ⟨â† e_r, e_c⟩ under the counting inner product.
    const auto ad = adjoint(a);
    bool pass = true;
    for (std::size_t r = 0; r < a.dim() && pass; ++r) {
      Section er(a.dim());
      er[r] = 1.0;
      const auto ad_er = ad.apply(er);
      for (std::size_t c = 0; c < a.dim() && pass; ++c) {
        Section ec(a.dim());
        ec[c] = 1.0;
        pass = std::abs(inner_product(p, er, a.apply(ec)) - inner_product(p, ad_er, ec)) <= tol;
      }
    }
    conj.record(pass, [&] { return "adjoint mismatch for X=" + describe_field(cat, x); });
  }
  s.checks = {conj, self_adj, decomposition};

  if (is_trivial_presheaf(p)) {
    NumberOpsReport total;
    std::size_t best = 0;
    std::string best_where;
    for (const auto& x : fields) {
      const auto r = number_ops_check(cat, x);
      auto merge = [](LawCheck& into, const LawCheck& from) {
        if (!from.ok() && into.ok()) into.first_failure = from.first_failure;
        into.checked += from.checked;
        into.failed += from.failed;
      };
      merge(total.creation, r.creation);
      merge(total.annihilation, r.annihilation);
      merge(total.a_adag, r.a_adag);
      merge(total.adag_a, r.adag_a);
      for (std::size_t b = 0; b < cat.object_count(); ++b) {
        const auto k = rho_preimage(cat, x, ObjectId{b}).size();
        if (k > best) {
          best = k;
          best_where = "X=" + describe_field(cat, x) + ", B=" + cat.object(ObjectId{b}).name;
        }
      }
    }
    for (const auto& c : total.checks()) s.checks.push_back(c);
    s.data["max_adagger_a_eigenvalue"] = best;
    s.notes.push_back("a(X)^dagger a(X)|B> = " + std::to_string(best) + "|B> attained at " + best_where);
  } else {
    s.notes.push_back("ket formulas are stated for the trivial presheaf; only structural adjoint checks ran");
  }
  return s;
}

/// For every arrow f with dom f != cod f: â(f) is idempotent and
/// α̂(f)² − α̂(f) = β̂(f)². The unsquared variant α̂(f)² − α̂(f) = β̂(f) is
/// evaluated and reported, not asserted.
inline SuiteResult momentum_suite(const FiniteCategory& cat, const HilbertPresheaf& p, double tol) {
  SuiteResult s{"momentum", {}, {}, {}};
  LawCheck idem("delta_idempotent");
  LawCheck squared("alpha2_minus_alpha_eq_beta2");
  std::size_t considered = 0, unsquared_holds = 0;
  std::string unsquared_failure;
  const double exact = all_zero_one(p) ? 0.0 : tol;
  for (std::size_t i = 0; i < cat.arrow_count(); ++i) {
    const ArrowId f{i};
    if (cat.dom(f) == cat.cod(f)) continue;
    ++considered;
    const auto x = delta_field(cat, f);
    const auto a = a_op(cat, p, x);
    const auto al = alpha_op(cat, p, x);
    const auto be = beta_mom_op(cat, p, x);
    const std::string nm = cat.arrow(f).name;
    idem.record(approx_equal(a * a, a, exact), [&] { return "a(" + nm + ") is not idempotent"; });
    squared.record(approx_equal(al * al - al, be * be, exact),
                   [&] { return "alpha^2 - alpha != beta^2 for " + nm; });
    if (approx_equal(al * al - al, be, tol))
      ++unsquared_holds;
    else if (unsquared_failure.empty())
      unsquared_failure = nm;
  }
  s.checks = {idem, squared};
  s.data["arrows_considered"] = considered;
  s.data["unsquared_identity_holds"] = unsquared_holds;
  s.data["unsquared_identity_fails"] = considered - unsquared_holds;
  if (considered > unsquared_holds)
    s.notes.push_back("unsquared variant alpha(f)^2 - alpha(f) = beta(f) FAILS for " +
                      std::to_string(considered - unsquared_holds) + " of " + std::to_string(considered) +
                      " arrows (first: " + unsquared_failure + "); the squared form holds");
  return s;
}

inline SuiteResult separation_suite(const FiniteCategory& cat, const HilbertPresheaf& p, double tol) {
  SuiteResult s{"separation", {}, {}, {}};
  const auto rep = separation_report(cat, p, tol);
  LawCheck sep("arrow_separation");
  for (std::size_t i = 0; i < rep.separated.size(); ++i) sep.record(true, [] { return std::string(); });
  for (const auto& [f, g] : rep.unseparated)
    sep.record(false, [&] { return "a(X_" + cat.arrow(f).name + ") == a(X_" + cat.arrow(g).name + ")"; });
  s.checks = {sep};
  s.data["parallel_pairs"] = rep.separated.size() + rep.unseparated.size();
  s.data["arrow_separating"] = rep.arrow_separating();
  auto& un = s.data["unseparated"] = nlohmann::json::array();
  for (const auto& [f, g] : rep.unseparated) un.push_back({cat.arrow(f).name, cat.arrow(g).name});
  return s;
}

inline SuiteResult connectedness_suite(const FiniteCategory& cat, const HilbertPresheaf& p,
                                       const std::vector<ArrowField>& fields) {
  SuiteResult s{"connectedness", {}, {}, {}};
  const auto comps = connected_components(cat);
  s.checks = {component_block_check(cat, p, fields)};
  s.data["components"] = comps.size();
  auto& list = s.data["partition"] = nlohmann::json::array();
  for (const auto& c : comps) {
    auto names = nlohmann::json::array();
    for (auto a : c) names.push_back(cat.object(a).name);
    list.push_back(names);
  }
  if (comps.size() > 1) s.notes.push_back("objects are not connected; the representation is reducible");
  return s;
}

inline SuiteResult commutant_suite(const FiniteCategory& cat, const HilbertPresheaf& p, double tol) {
  SuiteResult s{"commutant", {}, {}, {}};
  const auto with = commutant_dimension(cat, p, true, tol);
  const auto without = commutant_dimension(cat, p, false, tol);
  s.data["dimension_with_adjoints"] = with;
  s.data["dimension_without_adjoints"] = without;
  s.data["irreducible"] = with == 1;
  s.notes.push_back("commutant dimension " + std::to_string(with) + " with adjoints, " + std::to_string(without) +
                    " without");
  return s;
}

/// Runs the named suites (all when `names` is empty) in canonical order.
inline std::vector<SuiteResult> run_suites(const FiniteCategory& cat, const HilbertPresheaf& p,
                                           std::vector<std::string> names, const CheckOptions& opt = {}) {
  if (names.empty()) names = suite_names();
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw StructuralError("unknown suite '" + n + "'");
  auto wanted = [&](const char* n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  const bool needs_fields = wanted("monoid") || wanted("multiplier") || wanted("homomorphism") || wanted("adjoint") ||
                            wanted("connectedness");
  std::vector<ArrowField> fields;
  if (needs_fields) fields = resolve_fields(cat, opt);

  std::vector<SuiteResult> out;
  if (wanted("category")) out.push_back(category_suite(cat));
  if (wanted("monoid")) out.push_back(monoid_suite(cat, fields));
  if (wanted("presheaf")) out.push_back(presheaf_suite(cat, p));
  // The remaining suites need a well-shaped presheaf.
  if (!presheaf_shape_errors(cat, p).empty()) {
    if (!wanted("presheaf")) out.push_back(presheaf_suite(cat, p));
    return out;
  }
  if (wanted("multiplier")) out.push_back(multiplier_suite(cat, p, fields, opt.tol));
  if (wanted("homomorphism")) out.push_back(homomorphism_suite(cat, p, fields, opt));
  if (wanted("adjoint")) out.push_back(adjoint_suite(cat, p, fields, opt.tol));
  if (wanted("momentum")) out.push_back(momentum_suite(cat, p, opt.tol));
  if (wanted("separation")) out.push_back(separation_suite(cat, p, opt.tol));
  if (wanted("connectedness")) out.push_back(connectedness_suite(cat, p, fields));
  if (wanted("commutant")) out.push_back(commutant_suite(cat, p, opt.commutant_tol));
  return out;
}

inline nlohmann::json to_json(const LawCheck& c) {
  nlohmann::json j{{"law", c.law}, {"checked", c.checked}, {"failed", c.failed}, {"ok", c.ok()}};
  if (!c.ok()) j["first_failure"] = c.first_failure;
  return j;
}

inline nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return {{"suite", s.name}, {"ok", s.ok()}, {"checks", checks}, {"notes", s.notes}, {"data", s.data}};
}

}  // namespace catquant
