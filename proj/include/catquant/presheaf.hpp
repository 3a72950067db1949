#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "catquant/category.hpp"
#include "catquant/error.hpp"
#include "catquant/matrix.hpp"
#include "catquant/report.hpp"

namespace catquant {

inline constexpr double kDefaultTolerance = 1e-12;

/// Sizes of the fibres K(A) and where each block starts in ⊕_A K(A).
struct BlockLayout {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> offsets;

  BlockLayout() = default;
  explicit BlockLayout(std::vector<std::size_t> d) : dims(std::move(d)), offsets(dims.size()) {
    std::exclusive_scan(dims.begin(), dims.end(), offsets.begin(), std::size_t{0});
  }

  std::size_t total() const noexcept { return dims.empty() ? 0 : offsets.back() + dims.back(); }
  std::size_t dim(ObjectId a) const { return dims.at(a.index); }
  std::size_t offset(ObjectId a) const { return offsets.at(a.index); }

  bool operator==(const BlockLayout&) const = default;
};

/// A presheaf of finite-dimensional Hilbert spaces: fibre dimension per object
/// and κ(f) : K(cod f) → K(dom f), stored as a dim(dom f) × dim(cod f) matrix.
struct HilbertPresheaf {
  std::vector<std::size_t> dims;
  std::vector<ComplexMatrix> kappa;

  BlockLayout layout() const { return BlockLayout(dims); }
  std::size_t total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
  const ComplexMatrix& operator()(ArrowId f) const { return kappa.at(f.index); }
};

/// Pull-back presheaf on a category of finite sets: K(A) = ℂ^|A| and
/// (κ(f)v)(a) = v(f(a)), i.e. entry (a, b) of κ(f) is 1 iff f(a) = b.
inline HilbertPresheaf set_presheaf(const FiniteCategory& cat) {
  HilbertPresheaf p;
  for (const auto& o : cat.objects()) {
    if (!o.payload) throw StructuralError("object '" + o.name + "' has no element set; pull-back presheaf undefined");
    if (o.payload->elements.empty()) throw StructuralError("object '" + o.name + "' is empty; fibres must be nonzero");
    p.dims.push_back(o.payload->elements.size());
  }
  for (const auto& a : cat.arrows()) {
    if (!a.map) throw StructuralError("arrow '" + a.name + "' has no element map; pull-back presheaf undefined");
    ComplexMatrix k(p.dims[a.dom.index], p.dims[a.cod.index]);
    for (std::size_t x = 0; x < a.map->size(); ++x) k(x, (*a.map)[x]) = 1.0;
    p.kappa.push_back(std::move(k));
  }
  return p;
}

/// One-dimensional fibres with every κ(f) = [1]: plain wave-functions on objects.
inline HilbertPresheaf trivial_presheaf(const FiniteCategory& cat) {
  HilbertPresheaf p;
  p.dims.assign(cat.object_count(), 1);
  p.kappa.assign(cat.arrow_count(), ComplexMatrix::identity(1));
  return p;
}

struct PresheafReport {
  std::vector<std::string> shape_errors;
  LawCheck identity{"presheaf_identity"};
  LawCheck functoriality{"presheaf_functoriality"};
  std::vector<std::pair<ArrowId, ArrowId>> violating_pairs;  // (f, g) with κ(f)κ(g) != κ(g∘f)

  bool ok() const noexcept { return shape_errors.empty() && identity.ok() && functoriality.ok(); }
};

inline bool all_zero_one(const HilbertPresheaf& p) {
  for (const auto& k : p.kappa)
    if (!k.is_zero_one()) return false;
  return true;
}

inline std::vector<std::string> presheaf_shape_errors(const FiniteCategory& cat, const HilbertPresheaf& p) {
  std::vector<std::string> errs;
  if (p.dims.size() != cat.object_count()) errs.push_back("presheaf has a dimension for " + std::to_string(p.dims.size()) +
                                                          " objects, category has " + std::to_string(cat.object_count()));
  if (p.kappa.size() != cat.arrow_count()) errs.push_back("presheaf has " + std::to_string(p.kappa.size()) +
                                                          " maps, category has " + std::to_string(cat.arrow_count()) + " arrows");
  if (!errs.empty()) return errs;
  for (std::size_t a = 0; a < p.dims.size(); ++a)
    if (p.dims[a] == 0) errs.push_back("fibre over '" + cat.object(ObjectId{a}).name + "' has dimension 0");
  for (std::size_t i = 0; i < cat.arrow_count(); ++i) {
    const auto& k = p.kappa[i];
    const std::size_t r = p.dims[cat.dom(ArrowId{i}).index];
    const std::size_t c = p.dims[cat.cod(ArrowId{i}).index];
    if (k.rows() != r || k.cols() != c)
      errs.push_back("kappa(" + cat.arrow(ArrowId{i}).name + ") is " + std::to_string(k.rows()) + "x" +
                     std::to_string(k.cols()) + ", expected " + std::to_string(r) + "x" + std::to_string(c));
  }
  return errs;
}

/// κ(id_A) = I and κ(f)κ(g) = κ(g∘f) over every composable pair. Comparison
/// is exact when every κ is a 0/1 matrix, else to `tol`.
inline PresheafReport validate_presheaf(const FiniteCategory& cat, const HilbertPresheaf& p,
                                        double tol = kDefaultTolerance) {
  PresheafReport rep;
  rep.shape_errors = presheaf_shape_errors(cat, p);
  if (!rep.shape_errors.empty()) return rep;
  const double eff = all_zero_one(p) ? 0.0 : tol;
  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    const ArrowId id = cat.identity(ObjectId{a});
    rep.identity.record(approx_equal(p(id), ComplexMatrix::identity(p.dims[a]), eff),
                        [&] { return "kappa(" + cat.arrow(id).name + ") is not the identity"; });
  }
  for (std::size_t fi = 0; fi < cat.arrow_count(); ++fi)
    for (std::size_t gi = 0; gi < cat.arrow_count(); ++gi) {
      const ArrowId f{fi}, g{gi};
      if (cat.cod(f) != cat.dom(g)) continue;
      const bool pass = approx_equal(p(f) * p(g), p(cat.composite(g, f)), eff);
      rep.functoriality.record(pass, [&] {
        return "kappa(" + cat.arrow(f).name + ") kappa(" + cat.arrow(g).name + ") != kappa(" + cat.arrow(g).name +
               " o " + cat.arrow(f).name + ")";
      });
      if (!pass) rep.violating_pairs.emplace_back(f, g);
    }
  return rep;
}

/// Whether f ↦ κ(f) is injective on Hom(A, A), per object.
inline std::vector<bool> endo_faithfulness(const FiniteCategory& cat, const HilbertPresheaf& p) {
  std::vector<bool> out(cat.object_count(), true);
  for (std::size_t i = 0; i < cat.arrow_count(); ++i)
    for (std::size_t j = i + 1; j < cat.arrow_count(); ++j) {
      const ArrowId f{i}, g{j};
      const ObjectId a = cat.dom(f);
      if (cat.cod(f) != a || cat.dom(g) != a || cat.cod(g) != a) continue;
      if (p(f) == p(g)) out[a.index] = false;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Sections

/// Per-object blocks ψ(A) concatenated in object order.
using Section = std::vector<Complex>;

/// ⟨ψ, φ⟩ = Σ_A ⟨ψ(A), φ(A)⟩ with the counting measure on objects;
/// conjugate-linear in ψ.
inline Complex inner_product(const HilbertPresheaf& p, std::span<const Complex> psi, std::span<const Complex> phi) {
  const std::size_t n = p.total_dim();
  if (psi.size() != n || phi.size() != n)
    throw StructuralError("section length does not match total fibre dimension " + std::to_string(n));
  Complex acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(psi[i]) * phi[i];
  return acc;
}

/// Basis vector for element `k` of the fibre over `a`; |A⟩ for the trivial presheaf.
inline Section basis_section(const HilbertPresheaf& p, ObjectId a, std::size_t k = 0) {
  const auto layout = p.layout();
  if (k >= layout.dim(a)) throw StructuralError("basis index outside the fibre");
  Section s(layout.total());
  s[layout.offset(a) + k] = 1.0;
  return s;
}

}  // namespace catquant
