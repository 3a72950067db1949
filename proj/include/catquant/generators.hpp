#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catquant/category.hpp"
#include "catquant/error.hpp"

namespace catquant {

inline constexpr std::size_t kDefaultMapCap = 1'000'000;

/// A finite partial order. `leq` holds the full relation as ordered pairs of
/// element positions.
struct FinitePoset {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::size_t, std::size_t>> leq;

  std::size_t size() const noexcept { return elements.size(); }

  std::vector<std::vector<bool>> leq_matrix() const {
    std::vector<std::vector<bool>> m(size(), std::vector<bool>(size(), false));
    for (auto [x, y] : leq) {
      if (x >= size() || y >= size()) throw StructuralError("poset '" + name + "': relation out of range");
      m[x][y] = true;
    }
    return m;
  }

  /// Empty when `leq` is reflexive, antisymmetric and transitive.
  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    auto m = leq_matrix();
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x)
      if (!m[x][x]) out.push_back("not reflexive at " + elements[x]);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (m[x][y] && m[y][x]) out.push_back("not antisymmetric: " + elements[x] + ", " + elements[y]);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (m[x][y] && m[y][z] && !m[x][z])
            out.push_back("not transitive: " + elements[x] + " <= " + elements[y] + " <= " + elements[z]);
    return out;
  }

  /// Poset generated by `relations` (reflexive-transitive closure). Throws if
  /// the closure is not antisymmetric.
  static FinitePoset generated_by(std::string name, std::vector<std::string> elements,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
    const std::size_t n = elements.size();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) m[x][x] = true;
    for (auto [x, y] : relations) {
      if (x >= n || y >= n) throw StructuralError("poset '" + name + "': relation out of range");
      m[x][y] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (m[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (m[k][j]) m[i][j] = true;
    FinitePoset p{std::move(name), std::move(elements), {}};
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (m[x][y]) p.leq.emplace_back(x, y);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (m[x][y] && m[y][x])
          throw StructuralError("poset '" + p.name + "': relation is not antisymmetric (" + p.elements[x] + ", " +
                                p.elements[y] + ")");
    return p;
  }

  static FinitePoset chain(std::string name, std::vector<std::string> elements) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) covers.emplace_back(i, i + 1);
    return generated_by(std::move(name), std::move(elements), covers);
  }

  static FinitePoset antichain(std::string name, std::vector<std::string> elements) {
    return generated_by(std::move(name), std::move(elements), {});
  }
};

/// A topology on at most 64 points, opens stored as bitmasks over point
/// positions and kept sorted.
struct FiniteTopology {
  using Mask = std::uint64_t;

  std::string name;
  std::vector<std::string> points;
  std::vector<Mask> opens;

  std::size_t size() const noexcept { return points.size(); }
  Mask full() const noexcept { return points.size() == 64 ? ~Mask{0} : (Mask{1} << points.size()) - 1; }
  bool is_open(Mask u) const { return std::binary_search(opens.begin(), opens.end(), u); }

  void normalize() {
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  }

  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    if (size() > 64) {
      out.push_back("more than 64 points");
      return out;
    }
    for (Mask u : opens)
      if (u & ~full()) out.push_back("open set refers to a missing point");
    if (!is_open(0)) out.push_back("empty set is not open");
    if (!is_open(full())) out.push_back("whole space is not open");
    for (Mask u : opens)
      for (Mask v : opens) {
        if (!is_open(u | v)) out.push_back("not closed under union");
        if (!is_open(u & v)) out.push_back("not closed under intersection");
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static FiniteTopology from_sets(std::string name, std::vector<std::string> points,
                                  const std::vector<std::vector<std::size_t>>& sets) {
    if (points.size() > 64) throw StructuralError("topology '" + name + "': more than 64 points");
    FiniteTopology t{std::move(name), std::move(points), {}};
    for (const auto& s : sets) {
      Mask m = 0;
      for (auto x : s) {
        if (x >= t.size()) throw StructuralError("topology '" + t.name + "': open set refers to a missing point");
        m |= Mask{1} << x;
      }
      t.opens.push_back(m);
    }
    t.normalize();
    return t;
  }

  std::vector<std::vector<std::size_t>> open_sets() const {
    std::vector<std::vector<std::size_t>> out;
    for (Mask u : opens) {
      std::vector<std::size_t> s;
      for (std::size_t x = 0; x < size(); ++x)
        if (u >> x & 1) s.push_back(x);
      out.push_back(std::move(s));
    }
    return out;
  }

  static FiniteTopology discrete(std::string name, std::vector<std::string> points) {
    if (points.size() > 20) throw StructuralError("discrete topology on more than 20 points is not enumerated");
    FiniteTopology t{std::move(name), std::move(points), {}};
    for (Mask u = 0; u <= t.full(); ++u) t.opens.push_back(u);
    return t;
  }
};

/// A finite group acting on the left of a finite carrier.
/// `table[a][b]` is the product a·b; `action[g][q]` is g·q.
struct FiniteGroupAction {
  std::vector<std::string> group;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::string> carrier;
  std::vector<std::vector<std::size_t>> action;

  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    const std::size_t n = group.size();
    if (n == 0) return {"empty group"};
    if (table.size() != n) return {"group table has the wrong number of rows"};
    for (const auto& row : table) {
      if (row.size() != n) return {"group table row has the wrong length"};
      for (auto v : row)
        if (v >= n) return {"group table entry out of range"};
    }
    if (action.size() != n) return {"action table has the wrong number of rows"};
    for (const auto& row : action) {
      if (row.size() != carrier.size()) return {"action row has the wrong length"};
      for (auto v : row)
        if (v >= carrier.size()) return {"action entry out of range"};
    }
    auto e = unit();
    if (!e) return {"group has no unit"};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]]) out.push_back("group product not associative");
    for (std::size_t a = 0; a < n; ++a) {
      bool inv = false;
      for (std::size_t b = 0; b < n && !inv; ++b) inv = table[a][b] == *e && table[b][a] == *e;
      if (!inv) out.push_back("element " + group[a] + " has no inverse");
    }
    for (std::size_t q = 0; q < carrier.size(); ++q)
      if (action[*e][q] != q) out.push_back("unit does not act trivially on " + carrier[q]);
    for (std::size_t g1 = 0; g1 < n; ++g1)
      for (std::size_t g2 = 0; g2 < n; ++g2)
        for (std::size_t q = 0; q < carrier.size(); ++q)
          if (action[g2][action[g1][q]] != action[table[g2][g1]][q]) out.push_back("action is not compatible with the product");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<std::size_t> unit() const {
    for (std::size_t e = 0; e < group.size(); ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < group.size() && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
      if (ok) return e;
    }
    return std::nullopt;
  }

  /// ℤ_n acting on `carrier` through `shift` (point q goes to shift(k, q) under k).
  static FiniteGroupAction cyclic(std::size_t n, std::vector<std::string> carrier,
                                  const std::function<std::size_t(std::size_t, std::size_t)>& shift) {
    FiniteGroupAction ga;
    for (std::size_t k = 0; k < n; ++k) ga.group.push_back(std::to_string(k));
    ga.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) ga.table[a][b] = (a + b) % n;
    ga.carrier = std::move(carrier);
    ga.action.assign(n, std::vector<std::size_t>(ga.carrier.size()));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t q = 0; q < ga.carrier.size(); ++q) ga.action[k][q] = shift(k, q);
    return ga;
  }
};

// ---------------------------------------------------------------------------
// Structure-preserving map enumeration

using ElementMap = std::vector<std::size_t>;

/// All maps {0..n_src-1} → {0..n_dst-1} accepted by `keep`, in lexicographic
/// order of the table (image of element 0 most significant).
template <class Keep>
std::vector<ElementMap> enumerate_maps(std::size_t n_src, std::size_t n_dst, bool injective, std::size_t cap,
                                       Keep&& keep) {
  const double candidates = std::pow(static_cast<double>(n_dst), static_cast<double>(n_src));
  if (candidates > static_cast<double>(cap)) throw CapExceeded("map enumeration", candidates, cap);
  std::vector<ElementMap> out;
  if (n_src == 0) {
    out.emplace_back();
    return out;
  }
  if (n_dst == 0) return out;
  ElementMap f(n_src, 0);
  while (true) {
    bool ok = true;
    if (injective) {
      std::vector<bool> hit(n_dst, false);
      for (auto y : f) {
        if (hit[y]) {
          ok = false;
          break;
        }
        hit[y] = true;
      }
    }
    if (ok && keep(static_cast<const ElementMap&>(f))) out.push_back(f);
    std::size_t i = n_src;
    while (i > 0) {
      --i;
      if (++f[i] < n_dst) break;
      f[i] = 0;
      if (i == 0) return out;
    }
  }
}

inline std::vector<ElementMap> all_maps(std::size_t n_src, std::size_t n_dst, bool injective = false,
                                        std::size_t cap = kDefaultMapCap) {
  return enumerate_maps(n_src, n_dst, injective, cap, [](const ElementMap&) { return true; });
}

inline bool is_monotone(const FinitePoset& src, const FinitePoset& dst, const ElementMap& f) {
  auto d = dst.leq_matrix();
  for (auto [x, y] : src.leq)
    if (!d[f[x]][f[y]]) return false;
  return true;
}

/// Preimage of every open of `dst` is open in `src`.
inline bool is_continuous(const FiniteTopology& src, const FiniteTopology& dst, const ElementMap& f) {
  for (auto v : dst.opens) {
    FiniteTopology::Mask pre = 0;
    for (std::size_t x = 0; x < f.size(); ++x)
      if (v >> f[x] & 1) pre |= FiniteTopology::Mask{1} << x;
    if (!src.is_open(pre)) return false;
  }
  return true;
}

inline std::vector<ElementMap> monotone_maps(const FinitePoset& src, const FinitePoset& dst, bool injective = false,
                                             std::size_t cap = kDefaultMapCap) {
  auto d = dst.leq_matrix();
  return enumerate_maps(src.size(), dst.size(), injective, cap, [&](const ElementMap& f) {
    for (auto [x, y] : src.leq)
      if (!d[f[x]][f[y]]) return false;
    return true;
  });
}

inline std::vector<ElementMap> continuous_maps(const FiniteTopology& src, const FiniteTopology& dst,
                                               bool injective = false, std::size_t cap = kDefaultMapCap) {
  return enumerate_maps(src.size(), dst.size(), injective, cap,
                        [&](const ElementMap& f) { return is_continuous(src, dst, f); });
}

// ---------------------------------------------------------------------------
// Poset / topology conversion

/// Topology whose opens are the lower sets of `p`.
inline FiniteTopology poset_to_topology(const FinitePoset& p) {
  if (p.size() > 64) throw StructuralError("poset '" + p.name + "': more than 64 elements");
  auto m = p.leq_matrix();
  std::set<FiniteTopology::Mask> lower{0};
  for (std::size_t x = 0; x < p.size(); ++x) {
    FiniteTopology::Mask down = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (m[y][x]) down |= FiniteTopology::Mask{1} << y;
    std::vector<FiniteTopology::Mask> grown;
    for (auto u : lower) grown.push_back(u | down);
    lower.insert(grown.begin(), grown.end());
  }
  FiniteTopology t{p.name, p.elements, {lower.begin(), lower.end()}};
  t.normalize();
  return t;
}

/// Specialization order: x <= y iff y lies in the closure of {x}, i.e. every
/// open containing y also contains x. Throws for non-T0 spaces.
inline FinitePoset topology_to_poset(const FiniteTopology& t) {
  const std::size_t n = t.size();
  FinitePoset p{t.name, t.points, {}};
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, true));
  for (auto u : t.opens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if ((u >> y & 1) && !(u >> x & 1)) m[x][y] = false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (m[x][y] && m[y][x])
        throw StructuralError("topology '" + t.name + "' is not T0: points " + t.points[x] + " and " + t.points[y] +
                              " are topologically indistinguishable");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (m[x][y]) p.leq.emplace_back(x, y);
  return p;
}

// ---------------------------------------------------------------------------
// Category constructions

enum class ArrowMode { all_monotone, injective_monotone };

namespace detail {

inline std::string map_arrow_name(const std::string& src, const std::string& dst, std::size_t k) {
  return src + "->" + dst + "#" + std::to_string(k);
}

inline bool is_identity_map(const ElementMap& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != i) return false;
  return true;
}

template <class Obj, class Enumerate>
FiniteCategory structured_set_category(std::string name, const std::vector<Obj>& objs,
                                       std::vector<ObjectRec> records, Enumerate&& maps_between) {
  std::vector<ArrowRec> arrows;
  for (std::size_t s = 0; s < objs.size(); ++s)
    for (std::size_t d = 0; d < objs.size(); ++d) {
      auto maps = maps_between(objs[s], objs[d]);
      for (std::size_t k = 0; k < maps.size(); ++k) {
        std::string nm = (s == d && is_identity_map(maps[k])) ? "id_" + objs[s].name
                                                               : map_arrow_name(objs[s].name, objs[d].name, k);
        arrows.push_back({std::move(nm), ObjectId{s}, ObjectId{d}, std::move(maps[k])});
      }
    }
  return category_from_element_maps(std::move(name), std::move(records), std::move(arrows));
}

}  // namespace detail

/// Category whose objects are the given posets and whose arrows are all
/// (optionally injective) order-preserving maps between them, endo-maps
/// included.
inline FiniteCategory poset_category(const std::vector<FinitePoset>& posets, ArrowMode mode = ArrowMode::all_monotone,
                                     std::size_t cap = kDefaultMapCap, std::string name = "posets") {
  std::vector<ObjectRec> records;
  for (const auto& p : posets) {
    if (auto pr = p.problems(); !pr.empty()) throw StructuralError("poset '" + p.name + "': " + pr.front());
    records.push_back({p.name, SetPayload{p.elements, p.leq, std::nullopt}});
  }
  const bool injective = mode == ArrowMode::injective_monotone;
  return detail::structured_set_category(std::move(name), posets, std::move(records),
                                         [&](const FinitePoset& s, const FinitePoset& d) {
                                           return monotone_maps(s, d, injective, cap);
                                         });
}

/// Category of the given finite spaces and all continuous maps between them.
inline FiniteCategory topology_category(const std::vector<FiniteTopology>& spaces, std::size_t cap = kDefaultMapCap,
                                        std::string name = "spaces") {
  std::vector<ObjectRec> records;
  for (const auto& t : spaces) {
    if (auto pr = t.problems(); !pr.empty()) throw StructuralError("topology '" + t.name + "': " + pr.front());
    records.push_back({t.name, SetPayload{t.points, std::nullopt, t.open_sets()}});
  }
  return detail::structured_set_category(std::move(name), spaces, std::move(records),
                                         [&](const FiniteTopology& s, const FiniteTopology& d) {
                                           return continuous_maps(s, d, false, cap);
                                         });
}

/// Objects are carrier points; one arrow (q, g) : q → g·q for every group
/// element, composed by the group product.
inline FiniteCategory group_action_category(const FiniteGroupAction& ga, std::string name = "group-action") {
  if (auto pr = ga.problems(); !pr.empty()) throw StructuralError("group action: " + pr.front());
  const std::size_t ng = ga.group.size();
  const std::size_t e = *ga.unit();
  std::vector<ObjectRec> objects;
  for (const auto& q : ga.carrier) objects.push_back({q, std::nullopt});
  std::vector<ArrowRec> arrows;
  std::vector<ArrowId> identities;
  for (std::size_t q = 0; q < ga.carrier.size(); ++q)
    for (std::size_t g = 0; g < ng; ++g)
      arrows.push_back({ga.group[g] + "@" + ga.carrier[q], ObjectId{q}, ObjectId{ga.action[g][q]}, std::nullopt});
  for (std::size_t q = 0; q < ga.carrier.size(); ++q) identities.push_back(ArrowId{q * ng + e});
  std::vector<CompositionEntry> table;
  for (std::size_t q = 0; q < ga.carrier.size(); ++q)
    for (std::size_t g1 = 0; g1 < ng; ++g1) {
      const std::size_t q2 = ga.action[g1][q];
      for (std::size_t g2 = 0; g2 < ng; ++g2)
        table.push_back({ArrowId{q2 * ng + g2}, ArrowId{q * ng + g1}, ArrowId{q * ng + ga.table[g2][g1]}});
    }
  return FiniteCategory(std::move(name), std::move(objects), std::move(arrows), std::move(identities), table);
}

/// Category with at most one arrow between any two objects; composition is
/// forced. `arrows` must list an identity `id_<object>` for each object and be
/// closed under composition.
inline FiniteCategory thin_category(std::string name, const std::vector<std::string>& object_names,
                                    std::vector<ArrowRec> arrows) {
  std::vector<ObjectRec> objects;
  for (const auto& n : object_names) objects.push_back({n, std::nullopt});
  const std::size_t no = objects.size();
  std::vector<std::vector<std::optional<ArrowId>>> between(no, std::vector<std::optional<ArrowId>>(no));
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto& slot = between.at(arrows[i].dom.index).at(arrows[i].cod.index);
    if (slot) throw StructuralError("thin category '" + name + "': two arrows between the same objects");
    slot = ArrowId{i};
  }
  std::vector<ArrowId> identities;
  for (std::size_t a = 0; a < no; ++a) {
    if (!between[a][a]) throw StructuralError("thin category '" + name + "': object without identity");
    identities.push_back(*between[a][a]);
  }
  std::vector<CompositionEntry> table;
  for (std::size_t g = 0; g < arrows.size(); ++g)
    for (std::size_t f = 0; f < arrows.size(); ++f) {
      if (arrows[f].cod != arrows[g].dom) continue;
      auto gf = between[arrows[f].dom.index][arrows[g].cod.index];
      if (!gf) throw StructuralError("thin category '" + name + "': not closed under composition");
      table.push_back({ArrowId{g}, ArrowId{f}, *gf});
    }
  return FiniteCategory(std::move(name), std::move(objects), std::move(arrows), std::move(identities), table);
}

/// Objects 0..n-1 with a single arrow n → m whenever m >= n.
inline FiniteCategory chain_category(std::size_t n) {
  if (n < 1) throw StructuralError("chain category needs at least one object");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<ArrowRec> arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      arrows.push_back({i == j ? "id_" + names[i] : names[i] + "->" + names[j], ObjectId{i}, ObjectId{j}, std::nullopt});
  return thin_category("chain-" + std::to_string(n), names, std::move(arrows));
}

// ---------------------------------------------------------------------------
// Built-in examples

/// Two causal sets A = {a} and B = {b1 <= b2} with all order-preserving maps.
/// Arrows: id_A, f1, f2 : A → B, g : B → A, and r, id_B, s on B. With
/// `forget_order` B becomes an antichain and the swap p : B → B appears.
inline FiniteCategory two_object_example(bool forget_order = false) {
  auto a = FinitePoset::chain("A", {"a"});
  auto b = forget_order ? FinitePoset::antichain("B", {"b1", "b2"}) : FinitePoset::chain("B", {"b1", "b2"});
  auto cat = poset_category({a, b}, ArrowMode::all_monotone, kDefaultMapCap,
                            forget_order ? "two-object-unordered" : "two-object");
  const std::map<std::pair<std::string, ElementMap>, std::string> names{
      {{"A->B", {0}}, "f1"}, {{"A->B", {1}}, "f2"}, {{"B->A", {0, 0}}, "g"},
      {{"B->B", {0, 0}}, "r"}, {{"B->B", {1, 1}}, "s"}, {{"B->B", {1, 0}}, "p"}};
  auto objects = cat.objects();
  auto arrows = cat.arrows();
  for (auto& ar : arrows) {
    const std::string key = objects[ar.dom.index].name + "->" + objects[ar.cod.index].name;
    if (auto it = names.find({key, *ar.map}); it != names.end()) ar.name = it->second;
  }
  return FiniteCategory(cat.name(), std::move(objects), std::move(arrows),
                        {cat.identity(ObjectId{0}), cat.identity(ObjectId{1})}, cat.composition_entries());
}

/// The four causal sets C1..C4: a point, a 2-chain, a 4-element "Y" (a < b,
/// b < c, b < d) and a 3-chain.
inline std::vector<FinitePoset> four_causal_sets() {
  return {FinitePoset::chain("C1", {"p"}), FinitePoset::chain("C2", {"a", "b"}),
          FinitePoset::generated_by("C3", {"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {1, 3}}),
          FinitePoset::chain("C4", {"a", "b", "c"})};
}

inline FiniteCategory four_causal_sets_category(ArrowMode mode = ArrowMode::all_monotone) {
  return poset_category(four_causal_sets(), mode, kDefaultMapCap, "fig1");
}

/// Five objects A1, A2, A3, B, C with arrows x_i : A_i → B, y : B → C and
/// the forced composites y∘x_i : A_i → C.
inline FiniteCategory five_object_example() {
  std::vector<std::string> names{"A1", "A2", "A3", "B", "C"};
  std::vector<ArrowRec> arrows;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string k = std::to_string(i + 1);
    arrows.push_back({"id_A" + k, ObjectId{i}, ObjectId{i}, std::nullopt});
    arrows.push_back({"x" + k, ObjectId{i}, ObjectId{3}, std::nullopt});
    arrows.push_back({"yx" + k, ObjectId{i}, ObjectId{4}, std::nullopt});
  }
  arrows.push_back({"id_B", ObjectId{3}, ObjectId{3}, std::nullopt});
  arrows.push_back({"y", ObjectId{3}, ObjectId{4}, std::nullopt});
  arrows.push_back({"id_C", ObjectId{4}, ObjectId{4}, std::nullopt});
  return thin_category("fig2", names, std::move(arrows));
}

/// Objects with identities only; handy for disconnected examples.
inline FiniteCategory discrete_category(const std::vector<std::string>& names) {
  std::vector<ArrowRec> arrows;
  for (std::size_t i = 0; i < names.size(); ++i) arrows.push_back({"id_" + names[i], ObjectId{i}, ObjectId{i}, std::nullopt});
  return thin_category("discrete", names, std::move(arrows));
}

}  // namespace catquant
