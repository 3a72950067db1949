#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catquant/error.hpp"

namespace catquant {

struct ObjectId {
  std::size_t index = 0;
  auto operator<=>(const ObjectId&) const = default;
};

struct ArrowId {
  std::size_t index = 0;
  auto operator<=>(const ArrowId&) const = default;
};

/// Underlying finite set of an object, with optional order or topology.
/// Relations and opens refer to element positions.
struct SetPayload {
  std::vector<std::string> elements;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> leq;
  std::optional<std::vector<std::vector<std::size_t>>> opens;

  bool operator==(const SetPayload&) const = default;
};

struct ObjectRec {
  std::string name;
  std::optional<SetPayload> payload;

  bool operator==(const ObjectRec&) const = default;
};

/// `map[i]` is the image of source element i, as a target element position.
struct ArrowRec {
  std::string name;
  ObjectId dom;
  ObjectId cod;
  std::optional<std::vector<std::size_t>> map;

  bool operator==(const ArrowRec&) const = default;
};

/// One entry of the composition table: `gf = g ∘ f`.
struct CompositionEntry {
  ArrowId g;
  ArrowId f;
  ArrowId gf;

  bool operator==(const CompositionEntry&) const = default;
};

/// A finite category with an explicit composition table.
///
/// Construction only enforces index ranges; the category axioms are checked by
/// validate_category() so that broken tables can still be loaded and
/// diagnosed. Objects and arrows keep their declaration order, which fixes
/// every enumeration and matrix basis downstream.
class FiniteCategory {
 public:
  FiniteCategory() = default;

  FiniteCategory(std::string name, std::vector<ObjectRec> objects, std::vector<ArrowRec> arrows,
                 std::vector<ArrowId> identities, const std::vector<CompositionEntry>& composition)
      : name_(std::move(name)),
        objects_(std::move(objects)),
        arrows_(std::move(arrows)),
        identities_(std::move(identities)),
        table_(arrows_.size() * arrows_.size()) {
    check_structure();
    for (const auto& e : composition) {
      check_arrow(e.g, "composition entry g");
      check_arrow(e.f, "composition entry f");
      check_arrow(e.gf, "composition entry gf");
      auto& slot = table_[slot_index(e.g, e.f)];
      if (slot && *slot != e.gf)
        throw StructuralError("conflicting composition entries for (" + arrows_[e.g.index].name +
                              ", " + arrows_[e.f.index].name + ")");
      slot = e.gf;
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<ObjectRec>& objects() const noexcept { return objects_; }
  const std::vector<ArrowRec>& arrows() const noexcept { return arrows_; }
  const ObjectRec& object(ObjectId a) const { return objects_.at(a.index); }
  const ArrowRec& arrow(ArrowId f) const { return arrows_.at(f.index); }
  ObjectId dom(ArrowId f) const { return arrows_.at(f.index).dom; }
  ObjectId cod(ArrowId f) const { return arrows_.at(f.index).cod; }
  ArrowId identity(ObjectId a) const { return identities_.at(a.index); }
  bool is_identity(ArrowId f) const { return identity(dom(f)) == f; }

  /// g ∘ f if the table has an entry for the pair.
  std::optional<ArrowId> compose(ArrowId g, ArrowId f) const { return table_.at(slot_index(g, f)); }

  /// g ∘ f, throwing if the table has no entry.
  ArrowId composite(ArrowId g, ArrowId f) const {
    auto r = compose(g, f);
    if (!r)
      throw StructuralError("no composite for (" + arrows_.at(g.index).name + ", " +
                            arrows_.at(f.index).name + ")");
    return *r;
  }

  std::vector<CompositionEntry> composition_entries() const {
    std::vector<CompositionEntry> out;
    const std::size_t n = arrows_.size();
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t f = 0; f < n; ++f)
        if (auto gf = table_[g * n + f]) out.push_back({ArrowId{g}, ArrowId{f}, *gf});
    return out;
  }

  /// Arrows with domain `a`, in arrow order.
  std::vector<ArrowId> out_arrows(ObjectId a) const {
    std::vector<ArrowId> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].dom == a) out.push_back(ArrowId{i});
    return out;
  }

  std::optional<ObjectId> find_object(const std::string& n) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (objects_[i].name == n) return ObjectId{i};
    return std::nullopt;
  }

  std::optional<ArrowId> find_arrow(const std::string& n) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == n) return ArrowId{i};
    return std::nullopt;
  }

  ObjectId object_named(const std::string& n) const {
    if (auto a = find_object(n)) return *a;
    throw StructuralError("unknown object '" + n + "'");
  }

  ArrowId arrow_named(const std::string& n) const {
    if (auto f = find_arrow(n)) return *f;
    throw StructuralError("unknown arrow '" + n + "'");
  }

  /// Copy with the table entry for (g, f) overwritten.
  FiniteCategory with_composite(ArrowId g, ArrowId f, ArrowId gf) const {
    check_arrow(gf, "replacement composite");
    FiniteCategory copy = *this;
    copy.table_.at(slot_index(g, f)) = gf;
    return copy;
  }

  bool has_element_maps() const {
    return std::all_of(objects_.begin(), objects_.end(), [](const ObjectRec& o) { return o.payload.has_value(); }) &&
           std::all_of(arrows_.begin(), arrows_.end(), [](const ArrowRec& a) { return a.map.has_value(); });
  }

  bool operator==(const FiniteCategory&) const = default;

 private:
  std::size_t slot_index(ArrowId g, ArrowId f) const {
    check_arrow(g, "g");
    check_arrow(f, "f");
    return g.index * arrows_.size() + f.index;
  }

  void check_arrow(ArrowId f, const char* what) const {
    if (f.index >= arrows_.size())
      throw StructuralError(std::string(what) + ": arrow index " + std::to_string(f.index) +
                            " out of range (" + std::to_string(arrows_.size()) + " arrows)");
  }

  void check_object(ObjectId a, const std::string& what) const {
    if (a.index >= objects_.size())
      throw StructuralError(what + ": object index " + std::to_string(a.index) + " out of range (" +
                            std::to_string(objects_.size()) + " objects)");
  }

  void check_structure() const {
    if (identities_.size() != objects_.size())
      throw StructuralError("identity list has " + std::to_string(identities_.size()) +
                            " entries for " + std::to_string(objects_.size()) + " objects");
    for (const auto& o : objects_) {
      if (!o.payload) continue;
      const std::size_t n = o.payload->elements.size();
      if (o.payload->leq)
        for (auto [x, y] : *o.payload->leq)
          if (x >= n || y >= n) throw StructuralError("object '" + o.name + "': order relation out of range");
      if (o.payload->opens)
        for (const auto& u : *o.payload->opens)
          for (auto x : u)
            if (x >= n) throw StructuralError("object '" + o.name + "': open set element out of range");
    }
    for (const auto& a : arrows_) {
      check_object(a.dom, "arrow '" + a.name + "' domain");
      check_object(a.cod, "arrow '" + a.name + "' codomain");
      if (!a.map) continue;
      const auto& src = objects_[a.dom.index].payload;
      const auto& dst = objects_[a.cod.index].payload;
      if (!src || !dst)
        throw StructuralError("arrow '" + a.name + "' has an element map but its objects have no elements");
      if (a.map->size() != src->elements.size())
        throw StructuralError("arrow '" + a.name + "': element map length does not match domain size");
      for (auto y : *a.map)
        if (y >= dst->elements.size())
          throw StructuralError("arrow '" + a.name + "': element map image out of range");
    }
    for (auto id : identities_) check_arrow(id, "identity");
  }

  std::string name_;
  std::vector<ObjectRec> objects_;
  std::vector<ArrowRec> arrows_;
  std::vector<ArrowId> identities_;
  std::vector<std::optional<ArrowId>> table_;
};

/// Builds the composition table from element maps: g ∘ f is the unique arrow
/// from dom f to cod g carrying the composed map. Identities are the arrows
/// carrying identity maps.
inline FiniteCategory category_from_element_maps(std::string name, std::vector<ObjectRec> objects,
                                                 std::vector<ArrowRec> arrows) {
  for (const auto& o : objects)
    if (!o.payload) throw StructuralError("object '" + o.name + "' has no element set");
  for (const auto& a : arrows) {
    if (!a.map) throw StructuralError("arrow '" + a.name + "' has no element map");
    if (a.dom.index >= objects.size() || a.cod.index >= objects.size())
      throw StructuralError("arrow '" + a.name + "' refers to a missing object");
  }
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::size_t> by_map;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto key = std::make_tuple(arrows[i].dom.index, arrows[i].cod.index, *arrows[i].map);
    if (!by_map.emplace(key, i).second)
      throw StructuralError("arrows '" + arrows[by_map[key]].name + "' and '" + arrows[i].name +
                            "' carry the same element map");
  }
  std::vector<ArrowId> identities;
  for (std::size_t a = 0; a < objects.size(); ++a) {
    std::vector<std::size_t> id_map(objects[a].payload->elements.size());
    for (std::size_t k = 0; k < id_map.size(); ++k) id_map[k] = k;
    auto it = by_map.find(std::make_tuple(a, a, id_map));
    if (it == by_map.end()) throw StructuralError("object '" + objects[a].name + "' has no identity arrow");
    identities.push_back(ArrowId{it->second});
  }
  std::vector<CompositionEntry> table;
  for (std::size_t g = 0; g < arrows.size(); ++g)
    for (std::size_t f = 0; f < arrows.size(); ++f) {
      if (arrows[f].cod != arrows[g].dom) continue;
      std::vector<std::size_t> gf_map;
      for (auto x : *arrows[f].map) gf_map.push_back((*arrows[g].map).at(x));
      auto it = by_map.find(std::make_tuple(arrows[f].dom.index, arrows[g].cod.index, gf_map));
      if (it == by_map.end())
        throw StructuralError("composite of '" + arrows[g].name + "' after '" + arrows[f].name +
                              "' is not an arrow of the category");
      table.push_back({ArrowId{g}, ArrowId{f}, ArrowId{it->second}});
    }
  return FiniteCategory(std::move(name), std::move(objects), std::move(arrows), std::move(identities), table);
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  identity_shape,      // identity(A) is not an endo-arrow of A
  missing_composite,   // composable pair without a table entry
  spurious_composite,  // entry for a non-composable pair
  composite_shape,     // dom/cod of g∘f wrong
  left_identity,       // id_{cod f} ∘ f != f
  right_identity,      // f ∘ id_{dom f} != f
  associativity,       // h∘(g∘f) != (h∘g)∘f
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::identity_shape: return "identity_shape";
    case ViolationKind::missing_composite: return "missing_composite";
    case ViolationKind::spurious_composite: return "spurious_composite";
    case ViolationKind::composite_shape: return "composite_shape";
    case ViolationKind::left_identity: return "left_identity";
    case ViolationKind::right_identity: return "right_identity";
    case ViolationKind::associativity: return "associativity";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::vector<ArrowId> arrows;  // witnessing arrows, outermost first
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(ViolationKind k) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; }));
  }
};

/// Checks every category axiom exhaustively and reports all violations.
inline ValidationReport validate_category(const FiniteCategory& cat) {
  ValidationReport rep;
  auto nm = [&](ArrowId f) { return cat.arrow(f).name; };
  auto add = [&](ViolationKind k, std::vector<ArrowId> ids, std::string msg) {
    rep.violations.push_back({k, std::move(ids), std::move(msg)});
  };
  const std::size_t n = cat.arrow_count();

  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    ArrowId id = cat.identity(ObjectId{a});
    if (cat.dom(id) != ObjectId{a} || cat.cod(id) != ObjectId{a})
      add(ViolationKind::identity_shape, {id},
          "identity '" + nm(id) + "' of object '" + cat.object(ObjectId{a}).name + "' is not an endo-arrow of it");
  }

  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t fi = 0; fi < n; ++fi) {
      ArrowId g{gi}, f{fi};
      auto gf = cat.compose(g, f);
      const bool composable = cat.cod(f) == cat.dom(g);
      if (composable && !gf) {
        add(ViolationKind::missing_composite, {g, f}, "no composite for " + nm(g) + " ∘ " + nm(f));
      } else if (!composable && gf) {
        add(ViolationKind::spurious_composite, {g, f}, "composite defined for non-composable " + nm(g) + " ∘ " + nm(f));
      } else if (composable && (cat.dom(*gf) != cat.dom(f) || cat.cod(*gf) != cat.cod(g))) {
        add(ViolationKind::composite_shape, {g, f},
            nm(g) + " ∘ " + nm(f) + " = " + nm(*gf) + " has the wrong domain or codomain");
      }
    }

  for (std::size_t fi = 0; fi < n; ++fi) {
    ArrowId f{fi};
    ArrowId left = cat.identity(cat.cod(f));
    ArrowId right = cat.identity(cat.dom(f));
    if (cat.dom(left) == cat.cod(f)) {
      auto r = cat.compose(left, f);
      if (r && *r != f) add(ViolationKind::left_identity, {left, f}, nm(left) + " ∘ " + nm(f) + " = " + nm(*r));
    }
    if (cat.cod(right) == cat.dom(f)) {
      auto r = cat.compose(f, right);
      if (r && *r != f) add(ViolationKind::right_identity, {f, right}, nm(f) + " ∘ " + nm(right) + " = " + nm(*r));
    }
  }

  for (std::size_t fi = 0; fi < n; ++fi)
    for (std::size_t gi = 0; gi < n; ++gi) {
      ArrowId f{fi}, g{gi};
      if (cat.cod(f) != cat.dom(g)) continue;
      auto gf = cat.compose(g, f);
      if (!gf) continue;
      for (std::size_t hi = 0; hi < n; ++hi) {
        ArrowId h{hi};
        if (cat.cod(g) != cat.dom(h)) continue;
        auto hg = cat.compose(h, g);
        if (!hg) continue;
        auto lhs = cat.compose(h, *gf);
        auto rhs = cat.compose(*hg, f);
        if (!lhs || !rhs) continue;  // already reported as a shape problem
        if (*lhs != *rhs)
          add(ViolationKind::associativity, {h, g, f},
              nm(h) + " ∘ (" + nm(g) + " ∘ " + nm(f) + ") = " + nm(*lhs) + " but (" + nm(h) + " ∘ " + nm(g) +
                  ") ∘ " + nm(f) + " = " + nm(*rhs));
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Queries

inline std::vector<ArrowId> hom_set(const FiniteCategory& cat, ObjectId a, ObjectId b) {
  std::vector<ArrowId> out;
  for (std::size_t i = 0; i < cat.arrow_count(); ++i)
    if (cat.dom(ArrowId{i}) == a && cat.cod(ArrowId{i}) == b) out.push_back(ArrowId{i});
  return out;
}

/// Multiplication table of Hom(A, A): `product[i][j]` is the position of
/// `elements[i] ∘ elements[j]`.
struct EndoMonoidTable {
  ObjectId object;
  std::vector<ArrowId> elements;
  std::vector<std::vector<std::size_t>> product;
  std::size_t unit = 0;

  std::size_t size() const noexcept { return elements.size(); }

  bool is_group() const {
    for (std::size_t i = 0; i < size(); ++i) {
      bool has_inverse = false;
      for (std::size_t j = 0; j < size() && !has_inverse; ++j)
        has_inverse = product[i][j] == unit && product[j][i] == unit;
      if (!has_inverse) return false;
    }
    return true;
  }
};

inline EndoMonoidTable endo_monoid(const FiniteCategory& cat, ObjectId a) {
  EndoMonoidTable t;
  t.object = a;
  t.elements = hom_set(cat, a, a);
  auto pos = [&](ArrowId f) -> std::size_t {
    auto it = std::find(t.elements.begin(), t.elements.end(), f);
    if (it == t.elements.end()) throw StructuralError("endomorphism monoid is not closed under composition");
    return static_cast<std::size_t>(it - t.elements.begin());
  };
  t.unit = pos(cat.identity(a));
  t.product.assign(t.size(), std::vector<std::size_t>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) t.product[i][j] = pos(cat.composite(t.elements[i], t.elements[j]));
  return t;
}

/// Unordered pairs of distinct arrows sharing domain and codomain, (f, g) with f < g.
inline std::vector<std::pair<ArrowId, ArrowId>> parallel_pairs(const FiniteCategory& cat) {
  std::vector<std::pair<ArrowId, ArrowId>> out;
  for (std::size_t i = 0; i < cat.arrow_count(); ++i)
    for (std::size_t j = i + 1; j < cat.arrow_count(); ++j)
      if (cat.dom(ArrowId{i}) == cat.dom(ArrowId{j}) && cat.cod(ArrowId{i}) == cat.cod(ArrowId{j}))
        out.emplace_back(ArrowId{i}, ArrowId{j});
  return out;
}

}  // namespace catquant
