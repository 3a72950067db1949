#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "catquant/arrow_field.hpp"
#include "catquant/category.hpp"
#include "catquant/matrix.hpp"
#include "catquant/presheaf.hpp"
#include "catquant/report.hpp"

namespace catquant {

/// Real-valued function on objects.
struct ConfigFunction {
  std::vector<double> values;

  double operator()(ObjectId a) const { return values.at(a.index); }
  bool operator==(const ConfigFunction&) const = default;

  static ConfigFunction zero(std::size_t n) { return {std::vector<double>(n, 0.0)}; }
  /// Indicator of one object.
  static ConfigFunction delta(std::size_t n, ObjectId a) {
    ConfigFunction b = zero(n);
    b.values.at(a.index) = 1.0;
    return b;
  }
};

inline ConfigFunction operator+(const ConfigFunction& a, const ConfigFunction& b) {
  if (a.values.size() != b.values.size()) throw StructuralError("configuration functions on different object sets");
  ConfigFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

/// (β ∘ ρ)(A) = β(ρ(A)).
inline ConfigFunction pull_back(const ConfigFunction& beta, const std::vector<ObjectId>& rho_map) {
  ConfigFunction out;
  for (auto a : rho_map) out.values.push_back(beta(a));
  return out;
}

/// Element (X, β) of the semidirect product AF(Q) ×_ρ F(Ob Q, ℝ).
struct CqmElement {
  ArrowField field;
  ConfigFunction beta;

  bool operator==(const CqmElement&) const = default;
};

/// (X1, β1)(X2, β2) = (X1 & X2, β1 + β2 ∘ ρ_{X1}).
inline CqmElement cqm_product(const FiniteCategory& cat, const CqmElement& e1, const CqmElement& e2) {
  return {combine(cat, e1.field, e2.field), e1.beta + pull_back(e2.beta, rho(cat, e1.field))};
}

/// Square matrix on ⊕_A K(A) with access to its object-pair blocks.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(BlockLayout layout, ComplexMatrix m) : layout_(std::move(layout)), m_(std::move(m)) {
    if (m_.rows() != layout_.total() || m_.cols() != layout_.total())
      throw StructuralError("operator matrix does not match the total fibre dimension");
  }

  static OperatorMatrix zero(BlockLayout layout) {
    const std::size_t n = layout.total();
    return {std::move(layout), ComplexMatrix(n, n)};
  }
  static OperatorMatrix identity(BlockLayout layout) {
    const std::size_t n = layout.total();
    return {std::move(layout), ComplexMatrix::identity(n)};
  }

  const BlockLayout& layout() const noexcept { return layout_; }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// Block mapping K(col) into K(row).
  ComplexMatrix block(ObjectId row, ObjectId col) const {
    return m_.block(layout_.offset(row), layout_.offset(col), layout_.dim(row), layout_.dim(col));
  }
  void set_block(ObjectId row, ObjectId col, const ComplexMatrix& b) {
    if (b.rows() != layout_.dim(row) || b.cols() != layout_.dim(col)) throw StructuralError("block shape mismatch");
    m_.set_block(layout_.offset(row), layout_.offset(col), b);
  }

  OperatorMatrix adjoint() const { return {layout_, m_.adjoint()}; }
  Section apply(std::span<const Complex> psi) const { return m_.apply(psi); }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    return {a.layout_, a.m_ * b.m_};
  }
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    return {a.layout_, a.m_ + b.m_};
  }
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    return {a.layout_, a.m_ - b.m_};
  }
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a) { return {a.layout_, s * a.m_}; }
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) { return a.m_ == b.m_; }

 private:
  BlockLayout layout_;
  ComplexMatrix m_;
};

inline double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}
inline bool approx_equal(const OperatorMatrix& a, const OperatorMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return HUGE_VAL;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// ---------------------------------------------------------------------------
// Operators

/// (â(X)ψ)(A) = κ(X(A)) ψ(ρ_X A): the only nonzero block in row A sits in
/// column ρ_X(A).
inline OperatorMatrix a_op(const FiniteCategory& cat, const HilbertPresheaf& p, const ArrowField& x) {
  check_field(cat, x);
  auto op = OperatorMatrix::zero(p.layout());
  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    const ArrowId f = x.assignment[a];
    op.set_block(ObjectId{a}, cat.cod(f), p(f));
  }
  return op;
}

/// (V̂(β)ψ)(A) = e^{iβ(A)} ψ(A).
inline OperatorMatrix v_op(const HilbertPresheaf& p, const ConfigFunction& beta) {
  if (beta.values.size() != p.dims.size()) throw StructuralError("configuration function size mismatch");
  auto op = OperatorMatrix::zero(p.layout());
  for (std::size_t a = 0; a < p.dims.size(); ++a)
    op.set_block(ObjectId{a}, ObjectId{a}, std::polar(1.0, beta.values[a]) * ComplexMatrix::identity(p.dims[a]));
  return op;
}

/// (β̂ψ)(A) = β(A) ψ(A), the unexponentiated configuration operator.
inline OperatorMatrix beta_hat_op(const HilbertPresheaf& p, const ConfigFunction& beta) {
  if (beta.values.size() != p.dims.size()) throw StructuralError("configuration function size mismatch");
  auto op = OperatorMatrix::zero(p.layout());
  for (std::size_t a = 0; a < p.dims.size(); ++a)
    op.set_block(ObjectId{a}, ObjectId{a}, Complex(beta.values[a]) * ComplexMatrix::identity(p.dims[a]));
  return op;
}

/// V̂(β) â(X): with â(X)V̂(β) = V̂(β∘ρ_X)â(X) this order turns the CQM product
/// into operator multiplication.
inline OperatorMatrix cqm_rep(const FiniteCategory& cat, const HilbertPresheaf& p, const CqmElement& e) {
  return v_op(p, e.beta) * a_op(cat, p, e.field);
}

/// Conjugate transpose; the adjoint for the counting inner product.
inline OperatorMatrix adjoint(const OperatorMatrix& op) { return op.adjoint(); }

/// ½(â(X) + â(X)†)
inline OperatorMatrix alpha_op(const FiniteCategory& cat, const HilbertPresheaf& p, const ArrowField& x) {
  const auto a = a_op(cat, p, x);
  return Complex(0.5) * (a + a.adjoint());
}

/// (1/2i)(â(X) − â(X)†)
inline OperatorMatrix beta_mom_op(const FiniteCategory& cat, const HilbertPresheaf& p, const ArrowField& x) {
  const auto a = a_op(cat, p, x);
  return Complex(0.0, -0.5) * (a - a.adjoint());
}

// ---------------------------------------------------------------------------
// Adjoint relations on plain wave-functions

struct NumberOpsReport {
  LawCheck creation{"adjoint_ket"};          // â(X)†|B⟩ = |ρ_X B⟩
  LawCheck annihilation{"ket"};              // â(X)|B⟩ = Σ_{A∈ρ⁻¹{B}} |A⟩
  LawCheck a_adag{"a_adagger"};              // â â†|A⟩ = Σ_{C∈ρ⁻¹{ρ A}} |C⟩
  LawCheck adag_a{"adagger_a"};              // â†â|A⟩ = |ρ⁻¹{A}| |A⟩

  bool ok() const noexcept { return creation.ok() && annihilation.ok() && a_adag.ok() && adag_a.ok(); }
  std::vector<LawCheck> checks() const { return {creation, annihilation, a_adag, adag_a}; }
};

/// Checks the ket formulas for â(X) and its adjoint on the trivial presheaf,
/// with the right-hand sides built directly from ρ_X.
inline NumberOpsReport number_ops_check(const FiniteCategory& cat, const ArrowField& x) {
  NumberOpsReport rep;
  const auto p = trivial_presheaf(cat);
  const auto a = a_op(cat, p, x);
  const auto ad = a.adjoint();
  const auto r = rho(cat, x);
  const std::size_t n = cat.object_count();
  auto ket = [&](ObjectId b) { return basis_section(p, b); };
  auto sum_kets = [&](const std::vector<ObjectId>& objs) {
    Section s(n);
    for (auto o : objs) s[o.index] += 1.0;
    return s;
  };
  for (std::size_t bi = 0; bi < n; ++bi) {
    const ObjectId b{bi};
    const std::string nm = cat.object(b).name;
    rep.creation.record(ad.apply(ket(b)) == ket(r[bi]), [&] { return "adjoint ket relation fails at " + nm; });
    rep.annihilation.record(a.apply(ket(b)) == sum_kets(rho_preimage(cat, x, b)),
                            [&] { return "ket relation fails at " + nm; });
    rep.a_adag.record((a * ad).apply(ket(b)) == sum_kets(rho_preimage(cat, x, r[bi])),
                      [&] { return "a a^dagger relation fails at " + nm; });
    Section expect(n);
    expect[bi] = static_cast<double>(rho_preimage(cat, x, b).size());
    rep.adag_a.record((ad * a).apply(ket(b)) == expect, [&] { return "a^dagger a relation fails at " + nm; });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Diagnostics

struct SeparationReport {
  std::vector<std::pair<ArrowId, ArrowId>> separated;
  std::vector<std::pair<ArrowId, ArrowId>> unseparated;

  bool arrow_separating() const noexcept { return unseparated.empty(); }
};

/// Compares â(X_f) and â(X_g) for every parallel pair (f, g).
inline SeparationReport separation_report(const FiniteCategory& cat, const HilbertPresheaf& p,
                                          double tol = kDefaultTolerance) {
  SeparationReport rep;
  for (auto [f, g] : parallel_pairs(cat)) {
    const auto af = a_op(cat, p, delta_field(cat, f));
    const auto ag = a_op(cat, p, delta_field(cat, g));
    (approx_equal(af, ag, tol) ? rep.unseparated : rep.separated).emplace_back(f, g);
  }
  return rep;
}

/// Components of the undirected graph with an edge for every arrow, each
/// listed in object order, ordered by smallest member.
inline std::vector<std::vector<ObjectId>> connected_components(const FiniteCategory& cat) {
  const std::size_t n = cat.object_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : cat.arrows()) {
    const auto u = find(a.dom.index), v = find(a.cod.index);
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  std::vector<std::vector<ObjectId>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto root = find(a);
    if (slot[root] == n) {
      slot[root] = comps.size();
      comps.emplace_back();
    }
    comps[slot[root]].push_back(ObjectId{a});
  }
  return comps;
}

/// No â(X) has a nonzero block linking two different components.
inline LawCheck component_block_check(const FiniteCategory& cat, const HilbertPresheaf& p,
                                      const std::vector<ArrowField>& fields) {
  LawCheck check("component_block_diagonal");
  const auto comps = connected_components(cat);
  std::vector<std::size_t> comp_of(cat.object_count());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto a : comps[c]) comp_of[a.index] = c;
  for (const auto& x : fields) {
    const auto op = a_op(cat, p, x);
    bool pass = true;
    for (std::size_t r = 0; r < cat.object_count() && pass; ++r)
      for (std::size_t c = 0; c < cat.object_count() && pass; ++c)
        if (comp_of[r] != comp_of[c] && !op.block(ObjectId{r}, ObjectId{c}).is_zero()) pass = false;
    check.record(pass, [&] { return "a(X) links two components for X=" + describe_field(cat, x); });
  }
  return check;
}

struct MultiplierViolation {
  ArrowField x1;
  ArrowField x2;
  ObjectId object;
};

struct MultiplierReport {
  LawCheck law{"multiplier_cocycle"};
  std::vector<MultiplierViolation> violations;

  bool ok() const noexcept { return law.ok(); }
};

namespace detail {

inline void multiplier_case(const FiniteCategory& cat, const HilbertPresheaf& p, const ArrowField& x1,
                            const ArrowField& x2, ObjectId a, double tol, MultiplierReport& rep) {
  const ArrowId f = x1(a);
  const ArrowId g = x2(cat.cod(f));
  const ArrowId gf = combine(cat, x1, x2)(a);
  const bool pass = approx_equal(p(f) * p(g), p(gf), tol);
  rep.law.record(pass, [&] {
    return "m(X1," + cat.object(a).name + ") m(X2,rho A) != m(X1&X2,A) with X1(A)=" + cat.arrow(f).name +
           ", X2(rho A)=" + cat.arrow(g).name;
  });
  if (!pass) rep.violations.push_back({x1, x2, a});
}

}  // namespace detail

/// m(X1, A) m(X2, ρ_{X1} A) = m(X1 & X2, A) with m(X, A) = κ(X(A)), over all
/// field pairs and objects.
inline MultiplierReport multiplier_check(const FiniteCategory& cat, const HilbertPresheaf& p,
                                         const std::vector<ArrowField>& fields, double tol = kDefaultTolerance) {
  MultiplierReport rep;
  const double eff = all_zero_one(p) ? 0.0 : tol;
  for (const auto& x1 : fields)
    for (const auto& x2 : fields)
      for (std::size_t a = 0; a < cat.object_count(); ++a) detail::multiplier_case(cat, p, x1, x2, ObjectId{a}, eff, rep);
  return rep;
}

/// Same law, covering every value it can take without enumerating AF(Q): the
/// case (X1, X2, A) depends only on X1(A) = f and X2(cod f) = g, so one
/// witness pair (X_f, X_g) per object A, f out of A, g out of cod f suffices.
inline MultiplierReport multiplier_check_local(const FiniteCategory& cat, const HilbertPresheaf& p,
                                               double tol = kDefaultTolerance) {
  MultiplierReport rep;
  const double eff = all_zero_one(p) ? 0.0 : tol;
  for (std::size_t a = 0; a < cat.object_count(); ++a)
    for (auto f : cat.out_arrows(ObjectId{a})) {
      const auto x1 = delta_field(cat, f);
      for (auto g : cat.out_arrows(cat.cod(f)))
        detail::multiplier_case(cat, p, x1, delta_field(cat, g), ObjectId{a}, eff, rep);
    }
  return rep;
}

/// Generators used for the commutant: â(X_f) for every arrow and β̂(δ_A) for
/// every object, plus their adjoints when requested.
inline std::vector<OperatorMatrix> commutant_generators(const FiniteCategory& cat, const HilbertPresheaf& p,
                                                        bool include_adjoints) {
  std::vector<OperatorMatrix> gens;
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) gens.push_back(a_op(cat, p, delta_field(cat, ArrowId{f})));
  for (std::size_t a = 0; a < cat.object_count(); ++a)
    gens.push_back(beta_hat_op(p, ConfigFunction::delta(cat.object_count(), ObjectId{a})));
  if (include_adjoints) {
    const std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(gens[i].adjoint());
  }
  return gens;
}

/// Dimension of {M : [M, G] = 0 for every generator G}, as the nullity of
/// the stacked system (Gᵀ ⊗ I − I ⊗ G) vec(M) = 0. Singular values at or
/// below `tol` (relative to the largest, floored at 1) count as zero.
inline std::size_t commutant_dimension(const FiniteCategory& cat, const HilbertPresheaf& p, bool include_adjoints,
                                       double tol = 1e-10) {
  const auto gens = commutant_generators(cat, p, include_adjoints);
  const std::size_t n = p.total_dim();
  const std::size_t unknowns = n * n;
  if (unknowns == 0) return 0;
  Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n * n * gens.size()),
                                                static_cast<Eigen::Index>(unknowns));
  // Unknown M(i, j) lives in column i*n + j; equation row (g, r, c) is
  // (M G − G M)(r, c) = Σ_k M(r,k) G(k,c) − G(r,k) M(k,c).
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& g = gens[gi].matrix();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const auto row = static_cast<Eigen::Index>(gi * n * n + r * n + c);
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, static_cast<Eigen::Index>(r * n + k)) += g(k, c);
          sys(row, static_cast<Eigen::Index>(k * n + c)) -= g(r, k);
        }
      }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return unknowns - rank;
}

}  // namespace catquant
