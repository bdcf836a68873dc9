// Copyright 2026 The MatroidKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents: matroid expressions, element sets, families, demand graphs
// and result payloads. Elements are always referred to by label. Output uses
// nlohmann::json, whose object keys are kept sorted, so dumps are byte-stable.

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matroidkit/core.hpp"
#include "matroidkit/intersect.hpp"
#include "matroidkit/orient.hpp"
#include "matroidkit/packcov.hpp"

namespace matroidkit {

using Json = nlohmann::json;

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::string label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("element labels must be strings or integers");
}

inline std::vector<std::string> labels_of(const Json& j) {
  if (!j.is_array()) bad("expected an array of labels");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(label_of(x));
  return out;
}

inline long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

inline std::size_t count(const Json& j, const char* what) {
  const long long v = integer(j, what);
  if (v < 0) bad(std::string(what) + " must be non-negative");
  if (v > static_cast<long long>(kMaxElements)) {
    throw Error(Errc::too_large, std::string(what) + " exceeds the bit-set limit");
  }
  return static_cast<std::size_t>(v);
}

inline std::optional<std::vector<std::string>> optional_labels(const Json& j, std::size_t n) {
  if (!j.contains("labels")) return std::nullopt;
  auto labels = labels_of(j.at("labels"));
  if (labels.size() != n) bad("expected " + std::to_string(n) + " labels");
  return labels;
}

}  // namespace detail

/// Set of labels over m's index space.
inline ElementSet parse_set(const Matroid& m, const Json& j) {
  ElementSet s = m.labels().set_of(detail::labels_of(j));
  m.check_subset(s);
  return s;
}

inline Json emit_set(const Matroid& m, const ElementSet& s) {
  return Json(m.labels().labels_of(s));
}

/// Builds a matroid expression. The result is compact: its ground set is the
/// whole index space, in label order of the document.
inline Matroid parse_matroid(const Json& j) {
  using detail::bad;
  using detail::field;
  if (!j.is_object()) bad("a matroid expression must be an object");
  const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "uniform") {
    const std::size_t n = detail::count(field(j, "n"), "n");
    const long long r = detail::integer(field(j, "r"), "r");
    if (r < 0 || r > static_cast<long long>(n)) bad("uniform rank must lie in 0..n");
    return uniform(n, static_cast<int>(r), detail::optional_labels(j, n));
  }
  if (kind == "free" || kind == "zero") {
    const std::size_t n = detail::count(field(j, "n"), "n");
    auto labels = detail::optional_labels(j, n);
    return kind == "free" ? free_matroid(n, std::move(labels)) : rank_zero(n, std::move(labels));
  }
  if (kind == "graphic") {
    std::vector<std::string> vertices;
    const Json& vj = field(j, "vertices");
    if (vj.is_number_integer()) {
      vertices = GroundSet::indexed(detail::count(vj, "vertices")).labels();
    } else {
      vertices = detail::labels_of(vj);
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (!index.emplace(vertices[v], v).second) bad("duplicate vertex '" + vertices[v] + "'");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    const Json& ej = field(j, "edges");
    if (!ej.is_array()) bad("edges must be an array");
    for (const auto& e : ej) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) bad("an edge is [u, v] or [u, v, label]");
      auto endpoint = [&](const Json& x) {
        auto it = index.find(detail::label_of(x));
        if (it == index.end()) bad("unknown vertex '" + detail::label_of(x) + "'");
        return it->second;
      };
      edges.emplace_back(endpoint(e[0]), endpoint(e[1]));
      labels.push_back(e.size() == 3 ? detail::label_of(e[2]) : std::to_string(labels.size()));
    }
    if (edges.size() > kMaxElements) throw Error(Errc::too_large, "too many edges");
    return graphic(vertices.size(), std::move(edges), std::move(labels));
  }
  if (kind == "partition") {
    std::vector<std::string> universe;
    std::map<std::string, Element> index;
    auto intern = [&](const std::string& l) {
      auto [it, fresh] = index.emplace(l, static_cast<Element>(universe.size()));
      if (fresh) universe.push_back(l);
      return it->second;
    };
    if (j.contains("universe")) {
      for (const auto& l : detail::labels_of(j.at("universe"))) {
        if (index.count(l)) bad("duplicate element label '" + l + "'");
        intern(l);
      }
    }
    const bool fixed = j.contains("universe");
    std::vector<std::pair<std::vector<Element>, int>> raw;
    const Json& bj = field(j, "blocks");
    if (!bj.is_array()) bad("blocks must be an array");
    for (const auto& b : bj) {
      std::vector<Element> members;
      for (const auto& l : detail::labels_of(field(b, "elements"))) {
        if (fixed && !index.count(l)) bad("block element '" + l + "' is not in the universe");
        members.push_back(intern(l));
      }
      const long long cap = detail::integer(field(b, "cap"), "cap");
      if (cap < 0) bad("block capacity must be non-negative");
      raw.emplace_back(std::move(members), static_cast<int>(std::min<long long>(cap, 1 << 20)));
    }
    if (universe.size() > kMaxElements) throw Error(Errc::too_large, "too many elements");
    const std::size_t n = universe.size();
    std::vector<PartitionBlock> blocks;
    ElementSet seen(n);
    for (auto& [members, cap] : raw) {
      ElementSet block(n);
      for (Element e : members) block.insert(e);
      if (block.intersects(seen)) bad("partition blocks overlap");
      seen |= block;
      blocks.push_back({block, cap});
    }
    // Elements listed only in the universe behave as loops.
    if (seen != ElementSet::full(n)) blocks.push_back({ElementSet::full(n) - seen, 0});
    return partition(n, std::move(blocks), std::move(universe));
  }
  if (kind == "explicit") {
    const std::vector<std::string> universe = detail::labels_of(field(j, "universe"));
    if (universe.size() > kMaxElements) throw Error(Errc::too_large, "too many elements");
    const GroundSet g(universe);
    const bool bases = j.contains("bases");
    if (bases == j.contains("independent")) bad("explicit needs exactly one of bases/independent");
    const Json& fj = j.at(bases ? "bases" : "independent");
    if (!fj.is_array()) bad("family must be an array of label arrays");
    std::vector<ElementSet> family;
    for (const auto& s : fj) family.push_back(g.set_of(detail::labels_of(s)));
    if (bases && family.empty()) bad("a base list cannot be empty");
    return explicit_matroid(universe.size(), std::move(family),
                            bases ? FamilyKind::bases : FamilyKind::independent_sets, universe);
  }
  if (kind == "dual") return dual(parse_matroid(field(j, "of")));
  if (kind == "restrict" || kind == "contract") {
    const Matroid child = parse_matroid(field(j, "of"));
    const ElementSet x = parse_set(child, field(j, "set"));
    return compact(kind == "restrict" ? restrict_to(child, x) : contract(child, x));
  }
  if (kind == "sum") {
    const Json& pj = field(j, "parts");
    if (!pj.is_array()) bad("parts must be an array");
    std::vector<Matroid> parts;
    for (const auto& p : pj) parts.push_back(parse_matroid(p));
    return concat_sum(parts);
  }
  if (kind == "relabel") {
    const Matroid child = parse_matroid(field(j, "of"));
    const Json& mj = field(j, "map");
    if (!mj.is_object()) bad("relabel map must be an object");
    std::vector<std::string> names = child.labels().labels();
    for (const auto& [from, to] : mj.items()) {
      if (!child.labels().has(from)) bad("relabel of unknown element '" + from + "'");
      names[child.labels().find(from)] = detail::label_of(to);
    }
    std::vector<Element> identity(child.capacity());
    for (Element e = 0; e < child.capacity(); ++e) identity[e] = e;
    std::shared_ptr<const GroundSet> labels;
    try {
      labels = std::make_shared<const GroundSet>(std::move(names));
    } catch (const Error&) {
      bad("relabel map is not injective");
    }
    return relabel(child, std::move(identity), child.capacity(), std::move(labels));
  }
  bad("unknown matroid kind '" + kind + "'");
}

/// Explicit base-list document for m (exhaustive, so bounded).
inline Json emit_explicit(const Matroid& m, std::size_t bound = exhaustive_bound(16)) {
  if (m.ground().size() > bound) {
    throw Error(Errc::too_large, "explicit emission over " + std::to_string(m.ground().size()) +
                                     " elements exceeds bound " + std::to_string(bound));
  }
  const int r = m.rank();
  Json bases = Json::array();
  for_each_subset(m.ground(), [&](const ElementSet& s) {
    if (static_cast<int>(s.size()) == r && m.is_independent(s)) bases.push_back(emit_set(m, s));
  });
  return Json{{"kind", "explicit"},
              {"universe", m.labels().labels_of(m.ground())},
              {"bases", std::move(bases)}};
}

/// Reads N and moves it into M's index space by label.
inline Matroid parse_partner(const Matroid& m, const Json& j) {
  const Matroid n = parse_matroid(j);
  if (n.ground().size() != m.ground().size()) {
    throw Error(Errc::universe_mismatch, "M and N have different ground sets");
  }
  for (Element e : n.ground()) {
    if (!m.labels().has(n.labels().label(e))) {
      throw Error(Errc::universe_mismatch,
                  "element '" + n.labels().label(e) + "' of N is not in M");
    }
  }
  return align_to(n, m.labels_ptr());
}

/// {"members": [...]} (optionally with "universe") or a bare array.
inline MatroidFamily parse_family(const Json& j) {
  const Json& members = j.is_array() ? j : detail::field(j, "members");
  if (!members.is_array() || members.empty()) detail::bad("a family needs at least one member");
  MatroidFamily fam;
  for (const auto& x : members) {
    Matroid m = parse_matroid(x);
    fam.members.push_back(fam.members.empty() ? std::move(m) : parse_partner(fam.members[0], x));
  }
  if (j.is_object() && j.contains("universe")) {
    auto universe = std::make_shared<const GroundSet>(detail::labels_of(j.at("universe")));
    if (universe->size() != fam.members[0].ground().size()) {
      throw Error(Errc::universe_mismatch, "family universe differs from its members");
    }
    for (auto& m : fam.members) {
      for (Element e : m.ground()) {
        if (!universe->has(m.labels().label(e))) {
          throw Error(Errc::universe_mismatch, "member element '" + m.labels().label(e) +
                                                   "' is not in the universe");
        }
      }
      m = align_to(m, universe);
    }
  }
  check_family(fam);
  return fam;
}

/// {"vertices": [...], "edges": [[u, v, label], ...]}.
inline DemandGraph parse_graph(const Json& j) {
  DemandGraph g;
  const Json& vj = detail::field(j, "vertices");
  g.vertices = vj.is_number_integer() ? GroundSet::indexed(detail::count(vj, "vertices")).labels()
                                      : detail::labels_of(vj);
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!index.emplace(g.vertices[v], v).second) detail::bad("duplicate vertex '" + g.vertices[v] + "'");
  }
  const Json& ej = detail::field(j, "edges");
  if (!ej.is_array()) detail::bad("edges must be an array");
  std::map<std::string, int> seen_labels;
  for (const auto& e : ej) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) detail::bad("an edge is [u, v] or [u, v, label]");
    auto endpoint = [&](const Json& x) {
      auto it = index.find(detail::label_of(x));
      if (it == index.end()) detail::bad("unknown vertex '" + detail::label_of(x) + "'");
      return it->second;
    };
    GraphEdge edge{endpoint(e[0]), endpoint(e[1]),
                   e.size() == 3 ? detail::label_of(e[2]) : std::to_string(g.edges.size())};
    if (seen_labels[edge.label]++) detail::bad("duplicate edge label '" + edge.label + "'");
    g.edges.push_back(std::move(edge));
  }
  g.demand.assign(g.vertices.size(), 0);
  return g;
}

/// {"vertex": o, ...}; vertices left out get demand 0.
inline void parse_demands(DemandGraph& g, const Json& j) {
  if (!j.is_object()) detail::bad("demands must be an object mapping vertices to integers");
  for (const auto& [name, value] : j.items()) {
    std::size_t v = 0;
    while (v < g.vertices.size() && g.vertices[v] != name) ++v;
    if (v == g.vertices.size()) detail::bad("demand for unknown vertex '" + name + "'");
    const long long o = detail::integer(value, "demand");
    if (o < -static_cast<long long>(kMaxElements) || o > static_cast<long long>(kMaxElements)) {
      throw Error(Errc::demand_out_of_range, "demand for '" + name + "' is out of range");
    }
    g.demand[v] = static_cast<int>(o);
  }
}

inline Json emit_graph(const DemandGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({g.vertices[e.u], g.vertices[e.v], e.label});
  return Json{{"vertices", g.vertices}, {"edges", std::move(edges)}};
}

inline Json emit_demands(const DemandGraph& g) {
  Json out = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out[g.vertices[v]] = g.demand[v];
  return out;
}

inline Json emit_certificate(const Matroid& m, const IntersectionCertificate& c) {
  return Json{{"I", emit_set(m, c.common)},
              {"E_M", emit_set(m, c.m_side)},
              {"E_N", emit_set(m, c.n_side)},
              {"I_M", emit_set(m, c.m_part())},
              {"I_N", emit_set(m, c.n_part())},
              {"size", c.common.size()}};
}

inline Json emit_packcov(const MatroidFamily& fam, const PackCovResult& r) {
  const Matroid& m = fam[0];
  Json s = Json::array();
  Json i = Json::array();
  for (const auto& x : r.s) s.push_back(emit_set(m, x));
  for (const auto& x : r.i) i.push_back(emit_set(m, x));
  Json lifted = Json::array();
  for (Element x : r.lifted) {
    lifted.push_back({m.labels().label(static_cast<Element>(x / fam.k())), x % fam.k()});
  }
  return Json{{"E_p", emit_set(m, r.e_p)}, {"E_c", emit_set(m, r.e_c)}, {"S", std::move(s)},
              {"I", std::move(i)}, {"lifted_I", std::move(lifted)}, {"k", fam.k()}};
}

inline Json emit_outcome(const DemandGraph& g, const OrientationOutcome& out) {
  Json orientation = Json::object();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    orientation[g.edges[e].label] = g.vertices[out.head[e]];
  }
  Json v_prime = Json::array();
  for (std::size_t v : out.v_prime) v_prime.push_back(g.vertices[v]);
  const bool deficient = out.verdict == OrientationOutcome::Verdict::deficient;
  return Json{{"verdict", deficient ? "Deficient" : "AboveO"},
              {"orientation", std::move(orientation)},
              {"v_prime", std::move(v_prime)},
              {"counting_check", deficient && deficiency_counting_check(g, out.v_prime)}};
}

}  // namespace matroidkit
