#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "catquant/arrow_field.hpp"
#include "catquant/category.hpp"
#include "catquant/error.hpp"
#include "catquant/generators.hpp"
#include "catquant/matrix.hpp"
#include "catquant/presheaf.hpp"
#include "catquant/representation.hpp"

namespace catquant {

using json = nlohmann::json;

namespace detail {

inline const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

inline std::size_t lookup(const std::map<std::string, std::size_t>& names, const std::string& n,
                          const std::string& where, const char* kind) {
  auto it = names.find(n);
  if (it == names.end()) throw ParseError(where + ": unknown " + kind + " '" + n + "'");
  return it->second;
}

/// Identity of an object read off an explicit table: the unique endo-arrow
/// that is a two-sided unit wherever it composes.
inline std::optional<ArrowId> infer_identity(const std::vector<ArrowRec>& arrows,
                                             const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& table,
                                             std::size_t object) {
  std::optional<ArrowId> found;
  for (std::size_t e = 0; e < arrows.size(); ++e) {
    if (arrows[e].dom.index != object || arrows[e].cod.index != object) continue;
    bool unit = true;
    for (std::size_t f = 0; f < arrows.size() && unit; ++f) {
      if (arrows[f].cod.index == object) {
        auto it = table.find({e, f});
        unit = it != table.end() && it->second == f;
      }
      if (unit && arrows[f].dom.index == object) {
        auto it = table.find({f, e});
        unit = it != table.end() && it->second == f;
      }
    }
    if (unit) {
      if (found) return std::nullopt;
      found = ArrowId{e};
    }
  }
  return found;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Matrices

inline json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.entries()) entries.push_back({z.real(), z.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline ComplexMatrix matrix_from_json(const json& j, const std::string& where = "matrix") {
  const auto rows = detail::require(j, "rows", where);
  const auto cols = detail::require(j, "cols", where);
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned()) throw ParseError(where + ": rows/cols must be naturals");
  const auto& entries = detail::require_array(detail::require(j, "entries", where), where + ".entries");
  std::vector<Complex> data;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ParseError(where + ".entries[" + std::to_string(i) + "]: expected [re, im]");
    data.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  const auto r = rows.get<std::size_t>(), c = cols.get<std::size_t>();
  if (data.size() != r * c) throw ParseError(where + ": entries length does not equal rows*cols");
  return ComplexMatrix(r, c, std::move(data));
}

// ---------------------------------------------------------------------------
// Categories

inline json category_to_json(const FiniteCategory& cat) {
  json doc;
  if (!cat.name().empty()) doc["name"] = cat.name();
  json objects = json::array();
  for (const auto& o : cat.objects()) {
    json jo{{"name", o.name}};
    if (o.payload) {
      const auto& el = o.payload->elements;
      jo["elements"] = el;
      if (o.payload->leq) {
        json leq = json::array();
        for (auto [x, y] : *o.payload->leq) leq.push_back({el[x], el[y]});
        jo["leq"] = leq;
      }
      if (o.payload->opens) {
        json opens = json::array();
        for (const auto& u : *o.payload->opens) {
          json s = json::array();
          for (auto x : u) s.push_back(el[x]);
          opens.push_back(s);
        }
        jo["opens"] = opens;
      }
    }
    objects.push_back(jo);
  }
  doc["objects"] = objects;
  json arrows = json::array();
  for (const auto& a : cat.arrows()) {
    json ja{{"name", a.name}, {"dom", cat.object(a.dom).name}, {"cod", cat.object(a.cod).name}};
    if (a.map) {
      json m = json::array();
      for (auto y : *a.map) m.push_back(cat.object(a.cod).payload->elements[y]);
      ja["map"] = m;
    }
    arrows.push_back(ja);
  }
  doc["arrows"] = arrows;
  json ids = json::object();
  for (std::size_t a = 0; a < cat.object_count(); ++a)
    ids[cat.object(ObjectId{a}).name] = cat.arrow(cat.identity(ObjectId{a})).name;
  doc["identities"] = ids;

  bool derived = false;
  if (cat.has_element_maps()) {
    try {
      derived = category_from_element_maps(cat.name(), cat.objects(), cat.arrows()) == cat;
    } catch (const Error&) {
      derived = false;
    }
  }
  if (derived) {
    doc["composition"] = "derived";
  } else {
    json table = json::array();
    for (const auto& e : cat.composition_entries())
      table.push_back({{"g", cat.arrow(e.g).name}, {"f", cat.arrow(e.f).name}, {"gf", cat.arrow(e.gf).name}});
    doc["composition"] = table;
  }
  return doc;
}

/// Parses a category document. Malformed documents raise ParseError with the
/// JSON location; axiom violations are left for validate_category().
inline FiniteCategory category_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("category document: expected an object");
  const std::string name = doc.contains("name") ? detail::require_string(doc["name"], "name") : "";
  std::vector<ObjectRec> objects;
  std::map<std::string, std::size_t> object_index;
  std::vector<std::map<std::string, std::size_t>> element_index;
  const auto& jobjects = detail::require_array(detail::require(doc, "objects", "document"), "objects");
  for (std::size_t i = 0; i < jobjects.size(); ++i) {
    const std::string where = "objects[" + std::to_string(i) + "]";
    const auto& jo = jobjects[i];
    ObjectRec rec{detail::require_string(detail::require(jo, "name", where), where + ".name"), std::nullopt};
    if (!object_index.emplace(rec.name, i).second) throw ParseError(where + ": duplicate object name '" + rec.name + "'");
    std::map<std::string, std::size_t> elems;
    if (jo.contains("elements")) {
      SetPayload pl;
      const auto& je = detail::require_array(jo["elements"], where + ".elements");
      for (std::size_t k = 0; k < je.size(); ++k) {
        auto e = detail::require_string(je[k], where + ".elements[" + std::to_string(k) + "]");
        if (!elems.emplace(e, k).second) throw ParseError(where + ": duplicate element '" + e + "'");
        pl.elements.push_back(e);
      }
      if (jo.contains("leq")) {
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        const auto& jl = detail::require_array(jo["leq"], where + ".leq");
        for (std::size_t k = 0; k < jl.size(); ++k) {
          const std::string w = where + ".leq[" + std::to_string(k) + "]";
          if (!jl[k].is_array() || jl[k].size() != 2) throw ParseError(w + ": expected [x, y]");
          rel.emplace_back(detail::lookup(elems, detail::require_string(jl[k][0], w), w, "element"),
                           detail::lookup(elems, detail::require_string(jl[k][1], w), w, "element"));
        }
        pl.leq = std::move(rel);
      }
      if (jo.contains("opens")) {
        std::vector<std::vector<std::size_t>> opens;
        const auto& ju = detail::require_array(jo["opens"], where + ".opens");
        for (std::size_t k = 0; k < ju.size(); ++k) {
          const std::string w = where + ".opens[" + std::to_string(k) + "]";
          std::vector<std::size_t> u;
          for (const auto& x : detail::require_array(ju[k], w))
            u.push_back(detail::lookup(elems, detail::require_string(x, w), w, "element"));
          opens.push_back(std::move(u));
        }
        pl.opens = std::move(opens);
      }
      rec.payload = std::move(pl);
    } else if (jo.contains("leq") || jo.contains("opens")) {
      throw ParseError(where + ": \"leq\"/\"opens\" require \"elements\"");
    }
    element_index.push_back(std::move(elems));
    objects.push_back(std::move(rec));
  }

  std::vector<ArrowRec> arrows;
  std::map<std::string, std::size_t> arrow_index;
  const auto& jarrows = detail::require_array(detail::require(doc, "arrows", "document"), "arrows");
  for (std::size_t i = 0; i < jarrows.size(); ++i) {
    const std::string where = "arrows[" + std::to_string(i) + "]";
    const auto& ja = jarrows[i];
    ArrowRec rec;
    rec.name = detail::require_string(detail::require(ja, "name", where), where + ".name");
    if (!arrow_index.emplace(rec.name, i).second) throw ParseError(where + ": duplicate arrow name '" + rec.name + "'");
    rec.dom = ObjectId{detail::lookup(object_index, detail::require_string(detail::require(ja, "dom", where), where + ".dom"),
                                      where + ".dom", "object")};
    rec.cod = ObjectId{detail::lookup(object_index, detail::require_string(detail::require(ja, "cod", where), where + ".cod"),
                                      where + ".cod", "object")};
    if (ja.contains("map")) {
      const auto& src = objects[rec.dom.index].payload;
      const auto& dst = objects[rec.cod.index].payload;
      if (!src || !dst) throw ParseError(where + ".map: domain and codomain need \"elements\"");
      const auto& jm = detail::require_array(ja["map"], where + ".map");
      if (jm.size() != src->elements.size()) throw ParseError(where + ".map: length does not match the domain");
      std::vector<std::size_t> m;
      for (std::size_t k = 0; k < jm.size(); ++k)
        m.push_back(detail::lookup(element_index[rec.cod.index],
                                   detail::require_string(jm[k], where + ".map[" + std::to_string(k) + "]"),
                                   where + ".map[" + std::to_string(k) + "]", "element"));
      rec.map = std::move(m);
    }
    arrows.push_back(std::move(rec));
  }

  const auto& jcomp = detail::require(doc, "composition", "document");
  std::optional<FiniteCategory> derived;
  std::vector<CompositionEntry> table;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup_table;
  if (jcomp.is_string()) {
    if (jcomp.get<std::string>() != "derived") throw ParseError("composition: expected \"derived\" or a list");
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (!arrows[i].map) throw ParseError("arrows[" + std::to_string(i) + "]: \"derived\" composition needs \"map\"");
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (!objects[i].payload) throw ParseError("objects[" + std::to_string(i) + "]: \"derived\" composition needs \"elements\"");
    try {
      derived = category_from_element_maps(name, objects, arrows);
    } catch (const StructuralError& e) {
      throw ParseError(std::string("composition: ") + e.what());
    }
    table = derived->composition_entries();
  } else {
    const auto& jt = detail::require_array(jcomp, "composition");
    for (std::size_t i = 0; i < jt.size(); ++i) {
      const std::string w = "composition[" + std::to_string(i) + "]";
      auto arrow = [&](const char* key) {
        return ArrowId{detail::lookup(arrow_index, detail::require_string(detail::require(jt[i], key, w), w + "." + key),
                                      w + "." + key, "arrow")};
      };
      CompositionEntry e{arrow("g"), arrow("f"), arrow("gf")};
      auto [it, fresh] = lookup_table.emplace(std::make_pair(e.g.index, e.f.index), e.gf.index);
      if (!fresh && it->second != e.gf.index) throw ParseError(w + ": conflicting entry for the same pair");
      table.push_back(e);
    }
  }

  std::vector<ArrowId> identities(objects.size());
  if (doc.contains("identities")) {
    const auto& ji = doc["identities"];
    if (!ji.is_object()) throw ParseError("identities: expected an object");
    for (auto it = ji.begin(); it != ji.end(); ++it) {
      const std::string w = "identities." + it.key();
      const auto a = detail::lookup(object_index, it.key(), w, "object");
      identities[a] = ArrowId{detail::lookup(arrow_index, detail::require_string(it.value(), w), w, "arrow")};
    }
    for (std::size_t a = 0; a < objects.size(); ++a)
      if (!ji.contains(objects[a].name)) throw ParseError("identities: no entry for object '" + objects[a].name + "'");
  } else if (derived) {
    for (std::size_t a = 0; a < objects.size(); ++a) identities[a] = derived->identity(ObjectId{a});
  } else {
    for (std::size_t a = 0; a < objects.size(); ++a) {
      auto id = detail::infer_identity(arrows, lookup_table, a);
      if (!id) throw ParseError("identities: cannot determine the identity of '" + objects[a].name + "'; list it explicitly");
      identities[a] = *id;
    }
  }
  try {
    return FiniteCategory(name, std::move(objects), std::move(arrows), std::move(identities), table);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Presheaves, fields, configuration functions

inline json presheaf_to_json(const FiniteCategory& cat, const HilbertPresheaf& p) {
  json dims = json::object(), kappa = json::object();
  for (std::size_t a = 0; a < p.dims.size(); ++a) dims[cat.object(ObjectId{a}).name] = p.dims[a];
  for (std::size_t f = 0; f < p.kappa.size(); ++f) kappa[cat.arrow(ArrowId{f}).name] = matrix_to_json(p.kappa[f]);
  return {{"dims", dims}, {"kappa", kappa}};
}

inline HilbertPresheaf presheaf_from_json(const FiniteCategory& cat, const json& doc) {
  HilbertPresheaf p;
  const auto& jd = detail::require(doc, "dims", "presheaf");
  const auto& jk = detail::require(doc, "kappa", "presheaf");
  if (!jd.is_object() || !jk.is_object()) throw ParseError("presheaf: \"dims\" and \"kappa\" must be objects");
  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    const auto& n = cat.object(ObjectId{a}).name;
    if (!jd.contains(n)) throw ParseError("presheaf.dims: no entry for object '" + n + "'");
    if (!jd[n].is_number_unsigned()) throw ParseError("presheaf.dims." + n + ": expected a natural number");
    p.dims.push_back(jd[n].get<std::size_t>());
  }
  for (auto it = jd.begin(); it != jd.end(); ++it)
    if (!cat.find_object(it.key())) throw ParseError("presheaf.dims: unknown object '" + it.key() + "'");
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const auto& n = cat.arrow(ArrowId{f}).name;
    if (!jk.contains(n)) throw ParseError("presheaf.kappa: no entry for arrow '" + n + "'");
    p.kappa.push_back(matrix_from_json(jk[n], "presheaf.kappa." + n));
  }
  for (auto it = jk.begin(); it != jk.end(); ++it)
    if (!cat.find_arrow(it.key())) throw ParseError("presheaf.kappa: unknown arrow '" + it.key() + "'");
  return p;
}

inline json field_to_json(const FiniteCategory& cat, const ArrowField& x) {
  json m = json::object();
  for (std::size_t a = 0; a < x.size(); ++a) m[cat.object(ObjectId{a}).name] = cat.arrow(x.assignment[a]).name;
  return {{"assignment", m}};
}

inline ArrowField field_from_json(const FiniteCategory& cat, const json& doc) {
  const auto& m = detail::require(doc, "assignment", "field");
  if (!m.is_object()) throw ParseError("field.assignment: expected an object");
  ArrowField x;
  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    const auto& n = cat.object(ObjectId{a}).name;
    if (!m.contains(n)) throw ParseError("field.assignment: no arrow for object '" + n + "'");
    const auto arrow = cat.find_arrow(detail::require_string(m[n], "field.assignment." + n));
    if (!arrow) throw ParseError("field.assignment." + n + ": unknown arrow '" + m[n].get<std::string>() + "'");
    x.assignment.push_back(*arrow);
  }
  try {
    check_field(cat, x);
  } catch (const StructuralError& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
  return x;
}

inline json beta_to_json(const FiniteCategory& cat, const ConfigFunction& b) {
  json m = json::object();
  for (std::size_t a = 0; a < b.values.size(); ++a) m[cat.object(ObjectId{a}).name] = b.values[a];
  return {{"beta", m}};
}

inline ConfigFunction beta_from_json(const FiniteCategory& cat, const json& doc) {
  const auto& m = detail::require(doc, "beta", "configuration function");
  if (!m.is_object()) throw ParseError("beta: expected an object");
  ConfigFunction b;
  for (std::size_t a = 0; a < cat.object_count(); ++a) {
    const auto& n = cat.object(ObjectId{a}).name;
    if (!m.contains(n) || !m[n].is_number()) throw ParseError("beta: no numeric value for object '" + n + "'");
    b.values.push_back(m[n].get<double>());
  }
  return b;
}

// ---------------------------------------------------------------------------
// Generator inputs

/// {"posets": [{"name", "elements", "leq": [[x, y], ...]}]}; "leq" may list
/// generating relations only, the closure is taken.
inline std::vector<FinitePoset> posets_from_json(const json& doc) {
  std::vector<FinitePoset> out;
  const auto& jp = detail::require_array(detail::require(doc, "posets", "document"), "posets");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string w = "posets[" + std::to_string(i) + "]";
    const auto name = detail::require_string(detail::require(jp[i], "name", w), w + ".name");
    std::vector<std::string> elements;
    std::map<std::string, std::size_t> idx;
    for (const auto& e : detail::require_array(detail::require(jp[i], "elements", w), w + ".elements")) {
      elements.push_back(detail::require_string(e, w + ".elements"));
      if (!idx.emplace(elements.back(), elements.size() - 1).second) throw ParseError(w + ": duplicate element");
    }
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    if (jp[i].contains("leq"))
      for (const auto& r : detail::require_array(jp[i]["leq"], w + ".leq")) {
        if (!r.is_array() || r.size() != 2) throw ParseError(w + ".leq: expected [x, y]");
        rel.emplace_back(detail::lookup(idx, detail::require_string(r[0], w), w + ".leq", "element"),
                         detail::lookup(idx, detail::require_string(r[1], w), w + ".leq", "element"));
      }
    try {
      out.push_back(FinitePoset::generated_by(name, elements, rel));
    } catch (const StructuralError& e) {
      throw ParseError(w + ": " + e.what());
    }
  }
  return out;
}

/// {"spaces": [{"name", "points", "opens": [[...], ...]}]}
inline std::vector<FiniteTopology> topologies_from_json(const json& doc) {
  std::vector<FiniteTopology> out;
  const auto& js = detail::require_array(detail::require(doc, "spaces", "document"), "spaces");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string w = "spaces[" + std::to_string(i) + "]";
    const auto name = detail::require_string(detail::require(js[i], "name", w), w + ".name");
    std::vector<std::string> points;
    std::map<std::string, std::size_t> idx;
    for (const auto& e : detail::require_array(detail::require(js[i], "points", w), w + ".points")) {
      points.push_back(detail::require_string(e, w + ".points"));
      if (!idx.emplace(points.back(), points.size() - 1).second) throw ParseError(w + ": duplicate point");
    }
    std::vector<std::vector<std::size_t>> opens;
    for (const auto& u : detail::require_array(detail::require(js[i], "opens", w), w + ".opens")) {
      std::vector<std::size_t> s;
      for (const auto& x : detail::require_array(u, w + ".opens"))
        s.push_back(detail::lookup(idx, detail::require_string(x, w), w + ".opens", "point"));
      opens.push_back(std::move(s));
    }
    try {
      out.push_back(FiniteTopology::from_sets(name, points, opens));
    } catch (const StructuralError& e) {
      throw ParseError(w + ": " + e.what());
    }
    if (auto pr = out.back().problems(); !pr.empty()) throw ParseError(w + ": " + pr.front());
  }
  return out;
}

/// {"group": {"elements": [...], "table": [[product names]]},
///  "carrier": [...], "action": [[image names per point] per group element]}
inline FiniteGroupAction group_action_from_json(const json& doc) {
  FiniteGroupAction ga;
  const auto& jg = detail::require(doc, "group", "document");
  std::map<std::string, std::size_t> gidx, qidx;
  for (const auto& e : detail::require_array(detail::require(jg, "elements", "group"), "group.elements")) {
    ga.group.push_back(detail::require_string(e, "group.elements"));
    if (!gidx.emplace(ga.group.back(), ga.group.size() - 1).second) throw ParseError("group: duplicate element");
  }
  for (const auto& row : detail::require_array(detail::require(jg, "table", "group"), "group.table")) {
    std::vector<std::size_t> r;
    for (const auto& v : detail::require_array(row, "group.table"))
      r.push_back(detail::lookup(gidx, detail::require_string(v, "group.table"), "group.table", "element"));
    ga.table.push_back(std::move(r));
  }
  for (const auto& q : detail::require_array(detail::require(doc, "carrier", "document"), "carrier")) {
    ga.carrier.push_back(detail::require_string(q, "carrier"));
    if (!qidx.emplace(ga.carrier.back(), ga.carrier.size() - 1).second) throw ParseError("carrier: duplicate point");
  }
  for (const auto& row : detail::require_array(detail::require(doc, "action", "document"), "action")) {
    std::vector<std::size_t> r;
    for (const auto& v : detail::require_array(row, "action"))
      r.push_back(detail::lookup(qidx, detail::require_string(v, "action"), "action", "point"));
    ga.action.push_back(std::move(r));
  }
  if (auto pr = ga.problems(); !pr.empty()) throw ParseError("group action: " + pr.front());
  return ga;
}

}  // namespace catquant
