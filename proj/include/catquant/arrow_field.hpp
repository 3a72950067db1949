#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "catquant/category.hpp"
#include "catquant/error.hpp"
#include "catquant/report.hpp"

namespace catquant {

inline constexpr std::size_t kDefaultFieldCap = 100'000;

/// An out-arrow for every object: `assignment[A]` has domain A.
struct ArrowField {
  std::vector<ArrowId> assignment;

  ArrowId operator()(ObjectId a) const { return assignment.at(a.index); }
  std::size_t size() const noexcept { return assignment.size(); }

  auto operator<=>(const ArrowField&) const = default;
};

inline void check_field(const FiniteCategory& cat, const ArrowField& x) {
  if (x.size() != cat.object_count())
    throw StructuralError("arrow field has " + std::to_string(x.size()) + " entries for " +
                          std::to_string(cat.object_count()) + " objects");
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x.assignment[a].index >= cat.arrow_count()) throw StructuralError("arrow field refers to a missing arrow");
    if (cat.dom(x.assignment[a]) != ObjectId{a})
      throw StructuralError("arrow field assigns '" + cat.arrow(x.assignment[a]).name + "' to object '" +
                            cat.object(ObjectId{a}).name + "' which is not its domain");
  }
}

inline ArrowField make_field(const FiniteCategory& cat, std::vector<ArrowId> assignment) {
  ArrowField x{std::move(assignment)};
  check_field(cat, x);
  return x;
}

/// (X1 & X2)(A) = X2(cod X1(A)) ∘ X1(A): follow X1, then X2.
inline ArrowField combine(const FiniteCategory& cat, const ArrowField& x1, const ArrowField& x2) {
  ArrowField out;
  out.assignment.reserve(x1.size());
  for (std::size_t a = 0; a < x1.size(); ++a) {
    const ArrowId first = x1.assignment[a];
    out.assignment.push_back(cat.composite(x2(cat.cod(first)), first));
  }
  return out;
}

inline ArrowField identity_field(const FiniteCategory& cat) {
  ArrowField x;
  for (std::size_t a = 0; a < cat.object_count(); ++a) x.assignment.push_back(cat.identity(ObjectId{a}));
  return x;
}

/// X_f: f at dom f, identities elsewhere.
inline ArrowField delta_field(const FiniteCategory& cat, ArrowId f) {
  ArrowField x = identity_field(cat);
  x.assignment.at(cat.dom(f).index) = f;
  return x;
}

/// Induced right action on objects, ρ_X(A) = cod X(A).
inline std::vector<ObjectId> rho(const FiniteCategory& cat, const ArrowField& x) {
  std::vector<ObjectId> out;
  out.reserve(x.size());
  for (auto f : x.assignment) out.push_back(cat.cod(f));
  return out;
}

/// Objects A with ρ_X(A) = b.
inline std::vector<ObjectId> rho_preimage(const FiniteCategory& cat, const ArrowField& x, ObjectId b) {
  std::vector<ObjectId> out;
  for (std::size_t a = 0; a < x.size(); ++a)
    if (cat.cod(x.assignment[a]) == b) out.push_back(ObjectId{a});
  return out;
}

/// |AF(Q)| = product of out-degrees, as a double so that huge counts do not wrap.
inline double count_arrow_fields(const FiniteCategory& cat) {
  double n = 1.0;
  for (std::size_t a = 0; a < cat.object_count(); ++a) n *= static_cast<double>(cat.out_arrows(ObjectId{a}).size());
  return n;
}

/// Every arrow field, lexicographic in the assignment (first object most
/// significant, candidates in arrow order).
inline std::vector<ArrowField> enumerate_arrow_fields(const FiniteCategory& cat, std::size_t cap = kDefaultFieldCap) {
  const double count = count_arrow_fields(cat);
  if (count > static_cast<double>(cap)) throw CapExceeded("arrow-field enumeration", count, cap);
  const std::size_t n = cat.object_count();
  std::vector<std::vector<ArrowId>> choices(n);
  for (std::size_t a = 0; a < n; ++a) choices[a] = cat.out_arrows(ObjectId{a});
  std::vector<ArrowField> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 0) return out;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    ArrowField x;
    x.assignment.reserve(n);
    for (std::size_t a = 0; a < n; ++a) x.assignment.push_back(choices[a][pos[a]]);
    out.push_back(std::move(x));
    std::size_t i = n;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
    }
  }
}

/// `count` fields drawn uniformly (independently per object) from AF(Q).
inline std::vector<ArrowField> sample_arrow_fields(const FiniteCategory& cat, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<ArrowId>> choices(cat.object_count());
  for (std::size_t a = 0; a < cat.object_count(); ++a) choices[a] = cat.out_arrows(ObjectId{a});
  std::vector<ArrowField> out;
  for (std::size_t k = 0; k < count; ++k) {
    ArrowField x;
    for (const auto& c : choices) {
      std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
      x.assignment.push_back(c[pick(rng)]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

inline std::string describe_field(const FiniteCategory& cat, const ArrowField& x) {
  std::string s = "{";
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (a) s += ", ";
    s += cat.object(ObjectId{a}).name + ":" + cat.arrow(x.assignment[a]).name;
  }
  return s + "}";
}

struct MonoidLawReport {
  LawCheck associativity{"associativity"};
  LawCheck unit{"unit"};
  LawCheck right_action{"right_action"};

  bool ok() const noexcept { return associativity.ok() && unit.ok() && right_action.ok(); }
  std::vector<LawCheck> checks() const { return {associativity, unit, right_action}; }
};

/// Associativity over all triples, two-sided unit for every field, and
/// ρ_{X2} ∘ ρ_{X1} = ρ_{X1 & X2} over all pairs.
inline MonoidLawReport check_monoid_laws(const FiniteCategory& cat, const std::vector<ArrowField>& fields) {
  MonoidLawReport rep;
  const ArrowField iota = identity_field(cat);
  const std::size_t n = fields.size();
  const std::size_t nobj = cat.object_count();

  for (const auto& x : fields)
    rep.unit.record(combine(cat, iota, x) == x && combine(cat, x, iota) == x,
                    [&] { return "unit fails for " + describe_field(cat, x); });

  std::vector<std::vector<ArrowField>> pair(n);
  for (std::size_t i = 0; i < n; ++i) {
    pair[i].reserve(n);
    const auto ri = rho(cat, fields[i]);
    for (std::size_t j = 0; j < n; ++j) {
      pair[i].push_back(combine(cat, fields[i], fields[j]));
      const auto rj = rho(cat, fields[j]);
      const auto rij = rho(cat, pair[i][j]);
      std::size_t bad = nobj;
      for (std::size_t a = 0; a < nobj && bad == nobj; ++a)
        if (rj[ri[a].index] != rij[a]) bad = a;
      rep.right_action.record(bad == nobj, [&] {
        return "rho mismatch at object " + cat.object(ObjectId{bad}).name + " for X1=" + describe_field(cat, fields[i]) +
               ", X2=" + describe_field(cat, fields[j]);
      });
    }
  }

  // Both bracketings are evaluated pointwise from the cached pair products.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const ArrowField& left = pair[i][j];
        const ArrowField& jk = pair[j][k];
        std::size_t bad = nobj;
        for (std::size_t a = 0; a < nobj && bad == nobj; ++a) {
          // ((X1&X2)&X3)(A) and (X1&(X2&X3))(A)
          const ArrowId l = cat.composite(fields[k](cat.cod(left.assignment[a])), left.assignment[a]);
          const ArrowId first = fields[i].assignment[a];
          const ArrowId r = cat.composite(jk(cat.cod(first)), first);
          if (l != r) bad = a;
        }
        rep.associativity.record(bad == nobj, [&] {
          return "associativity fails at object " + cat.object(ObjectId{bad}).name + " for X1=" +
                 describe_field(cat, fields[i]) + ", X2=" + describe_field(cat, fields[j]) +
                 ", X3=" + describe_field(cat, fields[k]);
        });
      }
  return rep;
}

struct EndoAntirepReport {
  ObjectId object;
  LawCheck antirep{"delta_antirepresentation"};
  bool delta_injective = true;  // f ↦ X_f is injective on Hom(A, A)

  bool ok() const noexcept { return antirep.ok(); }
};

/// X_f & X_g = X_{g∘f} for all f, g in Hom(A, A).
inline EndoAntirepReport endo_antirep_check(const FiniteCategory& cat, ObjectId a) {
  EndoAntirepReport rep;
  rep.object = a;
  std::vector<ArrowId> endo;
  for (std::size_t i = 0; i < cat.arrow_count(); ++i)
    if (cat.dom(ArrowId{i}) == a && cat.cod(ArrowId{i}) == a) endo.push_back(ArrowId{i});
  std::vector<ArrowField> deltas;
  for (auto f : endo) deltas.push_back(delta_field(cat, f));
  for (std::size_t i = 0; i < endo.size(); ++i)
    for (std::size_t j = 0; j < endo.size(); ++j) {
      const auto lhs = combine(cat, deltas[i], deltas[j]);
      const auto rhs = delta_field(cat, cat.composite(endo[j], endo[i]));
      rep.antirep.record(lhs == rhs, [&] {
        return "X_" + cat.arrow(endo[i]).name + " & X_" + cat.arrow(endo[j]).name + " != X_(" +
               cat.arrow(endo[j]).name + " o " + cat.arrow(endo[i]).name + ")";
      });
      if (i < j && deltas[i] == deltas[j]) rep.delta_injective = false;
    }
  return rep;
}

}  // namespace catquant
