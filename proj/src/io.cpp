#include "frustra/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace frustra {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw GraphError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw GraphError(what + " must be an integer");
  return j.get<int>();
}

Sign parse_sign(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+" || s == "positive") return Sign::Positive;
    if (s == "-" || s == "negative") return Sign::Negative;
  } else if (j.is_number_integer()) {
    if (j.get<int>() == 1) return Sign::Positive;
    if (j.get<int>() == -1) return Sign::Negative;
  }
  throw GraphError("bad sign " + j.dump());
}

Dart parse_dart(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw GraphError("dart must be [edge, side], got " + j.dump());
  const Dart d{as_int(j[0], "dart edge"), as_int(j[1], "dart side")};
  if (d.side != 0 && d.side != 1) throw GraphError("dart side must be 0 or 1");
  return d;
}

Json stats_to_json(const EnumerationStats& s) {
  return Json{{"rooted_bases", s.rooted_bases},
              {"weightings", s.weightings},
              {"pruned_bases", s.pruned_bases},
              {"cheap_rejects", s.cheap_rejects},
              {"not_essentially_4ec", s.not_essentially_4ec},
              {"duplicates", s.duplicates},
              {"distinct", s.distinct},
              {"wrong_index", s.wrong_index},
              {"not_critical", s.not_critical},
              {"not_prime", s.not_prime},
              {"aborted", s.aborted},
              {"multi_edge_contractions", s.multi_edge_contractions}};
}

VerifierReport report_from_json(const Json& j) {
  VerifierReport r;
  r.name = field(j, "name").get<std::string>();
  r.applicable = field(j, "applicable").get<bool>();
  r.passed = field(j, "passed").get<bool>();
  r.witnesses = j.value("witnesses", std::vector<std::string>{});
  r.note = j.value("note", std::string{});
  return r;
}

std::string dot_edges(const SignedMultigraph& g, const std::set<EdgeId>& bold) {
  std::ostringstream out;
  for (const SignedEdge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"";
    std::vector<std::string> style;
    if (e.is_negative()) style.push_back("dashed");
    if (bold.count(e.id)) style.push_back("bold");
    if (!style.empty()) {
      out << ", style=\"";
      for (std::size_t i = 0; i < style.size(); ++i) out << (i ? "," : "") << style[i];
      out << "\"";
    }
    if (e.is_negative()) out << ", color=red";
    out << "];\n";
  }
  return out.str();
}

}  // namespace

Json graph_to_json(const SignedMultigraph& g) {
  Json edges = Json::array();
  for (const SignedEdge& e : g.edges())
    edges.push_back(Json{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"sign", std::string(1, sign_char(e.sign))}});
  return Json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

SignedMultigraph graph_from_json(const Json& j) {
  SignedMultigraph g;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw GraphError("\"vertices\" must be an array");
  for (const Json& v : vs) g.add_vertex(as_int(v, "vertex id"));
  const Json& es = field(j, "edges");
  if (!es.is_array()) throw GraphError("\"edges\" must be an array");
  for (const Json& e : es)
    g.add_edge_with_id(as_int(field(e, "id"), "edge id"), as_int(field(e, "u"), "endpoint"),
                       as_int(field(e, "v"), "endpoint"), parse_sign(field(e, "sign")));
  return g;
}

Json embedding_to_json(const CanonicalEmbedding& ce) {
  Json out = graph_to_json(ce.base.graph);
  Json rot = Json::object();
  for (const auto& [v, ring] : ce.base.rotation) {
    Json r = Json::array();
    for (const Dart& d : ring) r.push_back(Json::array({d.edge, d.side}));
    rot[std::to_string(v)] = std::move(r);
  }
  Json boundary = Json::array();
  Json insertions = Json::object();
  for (const BoundarySlot& s : ce.boundary) {
    if (s.dart) {
      boundary.push_back(s.dart->edge);
      insertions[std::to_string(s.dart->edge)] = s.inserted;
    } else {
      insertions["circle"] = s.inserted;
    }
  }
  Json head{{"k", ce.k}};
  head.update(out);
  head["rotation"] = std::move(rot);
  head["boundary"] = std::move(boundary);
  head["insertions"] = std::move(insertions);
  head["graph"] = graph_to_json(ce.graph);
  return head;
}

CanonicalEmbedding embedding_from_json(const Json& j) {
  const int k = as_int(field(j, "k"), "k");
  PlaneEmbedding base;
  base.graph = graph_from_json(j);
  const Json& rot = field(j, "rotation");
  if (!rot.is_object()) throw GraphError("\"rotation\" must be an object");
  for (const auto& [key, ring] : rot.items()) {
    VertexId v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw GraphError("rotation key \"" + key + "\" is not a vertex id");
    }
    auto& out = base.rotation[v];
    for (const Json& d : ring) out.push_back(parse_dart(d));
  }
  const Json& ins = field(j, "insertions");
  if (!ins.is_object()) throw GraphError("\"insertions\" must be an object");
  auto inserted_on = [&](const std::string& key) {
    std::vector<VertexId> out;
    if (ins.contains(key))
      for (const Json& v : ins.at(key)) out.push_back(as_int(v, "inserted vertex"));
    return out;
  };
  const Json& bnd = field(j, "boundary");
  if (!bnd.is_array()) throw GraphError("\"boundary\" must be an array");
  std::vector<BoundarySlot> slots;
  if (bnd.empty()) {
    if (!ins.contains("circle")) throw GraphError("empty boundary needs \"circle\" insertions");
    slots.push_back({std::nullopt, inserted_on("circle")});
  } else {
    check_rotation(base.graph, base.rotation);
    std::vector<EdgeId> want;
    for (const Json& e : bnd) want.push_back(as_int(e, "boundary edge"));
    // Locate the face and starting dart carrying this edge sequence.
    std::optional<std::vector<Dart>> walk;
    for (const Face& f : faces(base)) {
      const int n = f.length();
      if (n != static_cast<int>(want.size())) continue;
      for (int s = 0; s < n && !walk; ++s) {
        bool match = true;
        for (int i = 0; i < n && match; ++i) match = f.darts[(s + i) % n].edge == want[i];
        if (match) {
          walk.emplace();
          for (int i = 0; i < n; ++i) walk->push_back(f.darts[(s + i) % n]);
        }
      }
      if (walk) break;
    }
    if (!walk) throw GraphError("boundary edges do not form a facial walk of the base");
    for (const Dart& d : *walk) slots.push_back({d, inserted_on(std::to_string(d.edge))});
  }
  auto ce = make_canonical(base, std::move(slots), k);
  if (j.contains("graph") && !(graph_from_json(j.at("graph")) == ce.graph))
    throw GraphError("\"graph\" does not match the assembled embedding");
  return ce;
}

Json report_to_json(const VerifierReport& r) {
  return Json{{"name", r.name},
              {"applicable", r.applicable},
              {"passed", r.passed},
              {"witnesses", r.witnesses},
              {"note", r.note}};
}

Json criticality_to_json(const CriticalityReport& r) {
  Json out{{"k", r.k},
           {"is_critical", r.is_critical},
           {"char1", r.char1},
           {"char2", r.char2},
           {"char3", r.char3}};
  out["failing_edge"] = r.failing_edge ? Json(*r.failing_edge) : Json(nullptr);
  return out;
}

Json prime_to_json(const PrimeReport& r) {
  return Json{{"criticality", criticality_to_json(r.criticality)},
              {"irreducible", r.irreducible},
              {"disjoint_negative_cycles", r.disjoint_negative_cycles},
              {"is_prime", r.is_prime}};
}

Json bounds_to_json(const BoundReport& b) { return Json{{"k", b.k}, {"M", b.M}, {"edge_bound", b.edge_bound}}; }

Json catalog_to_json(const Catalog& c) {
  Json entries = Json::array();
  for (const CatalogEntry& e : c.entries) {
    Json reports = Json::array();
    for (const auto& r : e.reports) reports.push_back(report_to_json(r));
    entries.push_back(Json{{"canonical_key", e.key},
                           {"vertices", e.graph.vertex_count()},
                           {"edges", e.graph.edge_count()},
                           {"base_vertices", e.base_vertices},
                           {"weights", e.weights},
                           {"verifiers_ok", e.verifiers_ok()},
                           {"graph", graph_to_json(e.graph)},
                           {"embedding", e.embedding ? embedding_to_json(*e.embedding) : Json(nullptr)},
                           {"verifier_reports", std::move(reports)}});
  }
  Json out{{"k", c.k}, {"complete", c.complete}, {"max_base", c.max_base}, {"pruned", c.pruned}};
  out["bounds"] = c.bounds ? bounds_to_json(*c.bounds) : Json(nullptr);
  out["admissible_sequences"] = c.admissible_sequences ? Json(*c.admissible_sequences) : Json(nullptr);
  out["stats"] = stats_to_json(c.stats);
  out["notes"] = c.notes;
  out["entries"] = std::move(entries);
  return out;
}

Catalog catalog_from_json(const Json& j) {
  Catalog c;
  c.k = as_int(field(j, "k"), "k");
  c.complete = field(j, "complete").get<bool>();
  c.max_base = j.value("max_base", 0);
  c.pruned = j.value("pruned", true);
  c.notes = j.value("notes", std::vector<std::string>{});
  for (const Json& e : field(j, "entries")) {
    CatalogEntry ce;
    ce.key = field(e, "canonical_key").get<std::string>();
    ce.graph = graph_from_json(field(e, "graph"));
    ce.base_vertices = e.value("base_vertices", 0);
    ce.weights = e.value("weights", std::vector<int>{});
    if (e.contains("embedding") && !e.at("embedding").is_null()) ce.embedding = embedding_from_json(e.at("embedding"));
    if (e.contains("verifier_reports"))
      for (const Json& r : e.at("verifier_reports")) ce.reports.push_back(report_from_json(r));
    c.entries.push_back(std::move(ce));
  }
  return c;
}

std::string to_dot(const SignedMultigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) out << "  " << v << ";\n";
  out << dot_edges(g, {}) << "}\n";
  return out.str();
}

std::string to_dot(const CanonicalEmbedding& ce) {
  std::set<EdgeId> bold;
  if (ce.free_circle()) {
    for (const SignedEdge& e : ce.graph.edges())
      if (!e.is_negative()) bold.insert(e.id);
  } else {
    for (const BoundarySlot& s : ce.boundary)
      for (EdgeId e : ce.paths.at(s.dart->edge)) bold.insert(e);
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : ce.graph.vertices())
    out << "  " << v << (ce.is_inserted(v) ? " [shape=box]" : "") << ";\n";
  out << dot_edges(ce.graph, bold) << "}\n";
  return out.str();
}

}  // namespace frustra
