/**
 * JSON documents for groups, crossed complexes and presentations.
 *
 *   group:         {"order": n, "mul": [[...], ...], "name": "..."}
 *   complex:       {"L": n, "groups": [group...], "boundaries": [[...], ...],
 *                   "actions": [[[...], ...], ...], "name": "..."}
 *                  (a bare group document is read as a complex of length 1)
 *   presentation:  {"cells": [1, l1, l2, ...],
 *                   "attach": {"2": [word...], "3": [crossedword...], "4": [moduleelt...]}}
 *
 * with word = [[gen, exp], ...], crossedword = [[word, gen, exp], ...] and
 * moduleelt = [[coef, word, gen], ...]. boundaries[i] lists the images of
 * d_{i+2}; actions[i][g][e] is g acting on e in A_{i+2}.
 */
#ifndef XCOMPLEX_IO_HPP
#define XCOMPLEX_IO_HPP

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/error.hpp"
#include "xcomplex/evaluate.hpp"
#include "xcomplex/group.hpp"
#include "xcomplex/presentation.hpp"

namespace xcomplex::io {

using json = nlohmann::json;

/// Parses text, reporting syntax errors as ParseError with line and column.
inline json parse_json(const std::string& text, const std::string& source = "<input>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" +
                                           std::to_string(column) + ": malformed JSON");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

[[noreturn]] inline void shape_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) shape_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) shape_error(where, std::string("missing field '") + key + "'");
  return *it;
}

inline const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) shape_error(where, "expected an array");
  return j;
}

inline long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) shape_error(where, "expected an integer");
  return j.get<long long>();
}

inline std::size_t count(const json& j, const std::string& where) {
  const long long v = integer(j, where);
  if (v < 0) shape_error(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

inline Elem element(const json& j, const std::string& where) {
  const long long v = integer(j, where);
  if (v < 0 || v > std::numeric_limits<Elem>::max()) shape_error(where, "element index out of range");
  return static_cast<Elem>(v);
}

inline std::vector<Elem> elements(const json& j, const std::string& where) {
  std::vector<Elem> out;
  std::size_t i = 0;
  for (const auto& v : array(j, where)) out.push_back(element(v, where + "/" + std::to_string(i++)));
  return out;
}

inline std::string name_of(const json& j) {
  const auto it = j.find("name");
  return it != j.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

inline Word word(const json& j, const std::string& where) {
  Word w;
  std::size_t i = 0;
  for (const auto& l : array(j, where)) {
    const std::string at = where + "/" + std::to_string(i++);
    if (!l.is_array() || l.size() != 2) shape_error(at, "expected [gen, exp]");
    w.push_back({element(l[0], at + "/0"), static_cast<int>(integer(l[1], at + "/1"))});
  }
  return w;
}

}  // namespace detail

/// Reads the multiplication table of a group document. Group axioms are
/// checked by FiniteGroup::from_table, not here.
inline Table group_table_from_json(const json& j, const std::string& where = "group") {
  const std::size_t n = detail::count(detail::field(j, "order", where), where + "/order");
  const auto& mul = detail::array(detail::field(j, "mul", where), where + "/mul");
  Table t;
  for (std::size_t r = 0; r < mul.size(); ++r)
    t.push_back(detail::elements(mul[r], where + "/mul/" + std::to_string(r)));
  if (t.size() != n) detail::shape_error(where, "'order' does not match the number of table rows");
  return t;
}

inline FiniteGroup group_from_json(const json& j, const std::string& where = "group") {
  return FiniteGroup::from_table(group_table_from_json(j, where), detail::name_of(j));
}

/// Raw crossed complex data; run validate() or FiniteCrossedComplex::create
/// on the result. Group tables are checked here (errors propagate as the
/// corresponding group ErrorCode).
inline CrossedComplexData complex_data_from_json(const json& j) {
  CrossedComplexData d;
  d.name = detail::name_of(j);
  if (j.is_object() && j.contains("mul") && !j.contains("groups")) {
    d.groups.push_back(group_from_json(j));
    return d;
  }
  const std::size_t L = detail::count(detail::field(j, "L", "complex"), "complex/L");
  const auto& groups = detail::array(detail::field(j, "groups", "complex"), "complex/groups");
  if (groups.size() != L || L == 0) detail::shape_error("complex", "'L' must equal the number of groups (>= 1)");
  for (std::size_t k = 0; k < L; ++k) d.groups.push_back(group_from_json(groups[k], "complex/groups/" + std::to_string(k)));

  const json empty = json::array();
  const auto& boundaries = L > 1 ? detail::array(detail::field(j, "boundaries", "complex"), "complex/boundaries")
                                 : (j.contains("boundaries") ? j["boundaries"] : empty);
  const auto& actions = L > 1 ? detail::array(detail::field(j, "actions", "complex"), "complex/actions")
                              : (j.contains("actions") ? j["actions"] : empty);
  if (boundaries.size() != L - 1) detail::shape_error("complex/boundaries", "expected L - 1 entries");
  if (actions.size() != L - 1) detail::shape_error("complex/actions", "expected L - 1 entries");
  for (std::size_t i = 0; i + 1 < L; ++i) {
    const std::string bw = "complex/boundaries/" + std::to_string(i);
    d.boundaries.push_back(GroupHom{d.groups[i + 1], d.groups[i], detail::elements(boundaries[i], bw)});
    const std::string aw = "complex/actions/" + std::to_string(i);
    GroupAction act{d.groups[0], d.groups[i + 1], {}};
    const auto& rows = detail::array(actions[i], aw);
    if (rows.size() != d.groups[0].order()) detail::shape_error(aw, "expected one row per element of A_1");
    for (std::size_t g = 0; g < rows.size(); ++g) {
      const auto row = detail::elements(rows[g], aw + "/" + std::to_string(g));
      if (row.size() != d.groups[i + 1].order()) detail::shape_error(aw, "row length must be |A_n|");
      act.table.insert(act.table.end(), row.begin(), row.end());
    }
    d.actions.push_back(std::move(act));
  }
  return d;
}

inline FiniteCrossedComplex complex_from_json(const json& j) {
  return FiniteCrossedComplex::create(complex_data_from_json(j));
}

/// Structural parse only; use validate_presentation for the cell conditions.
inline CWPresentation presentation_from_json(const json& j) {
  CWPresentation p;
  p.name = detail::name_of(j);
  p.cells.clear();
  std::size_t i = 0;
  for (const auto& c : detail::array(detail::field(j, "cells", "presentation"), "presentation/cells"))
    p.cells.push_back(detail::count(c, "presentation/cells/" + std::to_string(i++)));
  const std::size_t D = p.dimension();
  if (D >= 4) p.attach_high.resize(D - 3);
  const json none = json::object();
  const auto it = j.find("attach");
  const json& attach = it == j.end() ? none : *it;
  if (!attach.is_object()) detail::shape_error("presentation/attach", "expected an object");
  for (const auto& [key, value] : attach.items()) {
    const std::string where = "presentation/attach/" + key;
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      detail::shape_error(where, "keys must be dimensions");
    }
    if (n < 2 || n > D) detail::shape_error(where, "no cells of this dimension");
    std::size_t c = 0;
    for (const auto& entry : detail::array(value, where)) {
      const std::string at = where + "/" + std::to_string(c++);
      if (n == 2) {
        p.attach2.push_back(detail::word(entry, at));
      } else if (n == 3) {
        CrossedWord cw;
        std::size_t t = 0;
        for (const auto& term : detail::array(entry, at)) {
          const std::string tw = at + "/" + std::to_string(t++);
          if (!term.is_array() || term.size() != 3) detail::shape_error(tw, "expected [word, gen, exp]");
          cw.push_back({detail::word(term[0], tw + "/0"), detail::element(term[1], tw + "/1"),
                        static_cast<int>(detail::integer(term[2], tw + "/2"))});
        }
        p.attach3.push_back(std::move(cw));
      } else {
        ModuleElt m;
        std::size_t t = 0;
        for (const auto& term : detail::array(entry, at)) {
          const std::string tw = at + "/" + std::to_string(t++);
          if (!term.is_array() || term.size() != 3) detail::shape_error(tw, "expected [coef, word, gen]");
          m.push_back({detail::integer(term[0], tw + "/0"), detail::word(term[1], tw + "/1"),
                       detail::element(term[2], tw + "/2")});
        }
        p.attach_high[n - 4].push_back(std::move(m));
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Serialization

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back({l.gen, l.exp});
  return out;
}

inline json to_json(const FiniteGroup& g) {
  json j{{"order", g.order()}, {"mul", g.table()}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

inline json to_json(const FiniteCrossedComplex& c) {
  json j{{"L", c.length()}};
  j["groups"] = json::array();
  j["boundaries"] = json::array();
  j["actions"] = json::array();
  for (std::size_t k = 1; k <= c.length(); ++k) j["groups"].push_back(to_json(c.group(k)));
  for (std::size_t n = 2; n <= c.length(); ++n) {
    j["boundaries"].push_back(c.boundary(n).image);
    const auto& act = c.action(n);
    const std::size_t ne = act.space.order();
    json rows = json::array();
    for (std::size_t g = 0; g < act.actor.order(); ++g)
      rows.push_back(std::vector<Elem>(act.table.begin() + g * ne, act.table.begin() + (g + 1) * ne));
    j["actions"].push_back(std::move(rows));
  }
  if (!c.name().empty()) j["name"] = c.name();
  return j;
}

inline json to_json(const CWPresentation& p) {
  json j{{"cells", p.cells}};
  json attach = json::object();
  if (p.count(2) > 0) {
    json a = json::array();
    for (const auto& w : p.attach2) a.push_back(word_to_json(w));
    attach["2"] = std::move(a);
  }
  if (p.count(3) > 0) {
    json a = json::array();
    for (const auto& cw : p.attach3) {
      json terms = json::array();
      for (const auto& t : cw) terms.push_back({word_to_json(t.conj), t.gen, t.exp});
      a.push_back(std::move(terms));
    }
    attach["3"] = std::move(a);
  }
  for (std::size_t n = 4; n <= p.dimension(); ++n) {
    if (p.count(n) == 0) continue;
    json a = json::array();
    for (const auto& m : p.attach_high[n - 4]) {
      json terms = json::array();
      for (const auto& t : m) terms.push_back({t.coef, word_to_json(t.twist), t.gen});
      a.push_back(std::move(terms));
    }
    attach[std::to_string(n)] = std::move(a);
  }
  j["attach"] = std::move(attach);
  if (!p.name.empty()) j["name"] = p.name;
  return j;
}

inline json to_json(const Morphism& f) { return f.values; }

inline json to_json(const ValidationReport& r) {
  json j{{"ok", r.ok()}};
  json list = json::array();
  for (const auto& v : r.violations) {
    json e{{"axiom", v.axiom}, {"degree", v.degree}, {"witness", v.witness}};
    if (!v.detail.empty()) e["detail"] = v.detail;
    list.push_back(std::move(e));
  }
  j["violations"] = std::move(list);
  return j;
}

}  // namespace xcomplex::io

#endif
