#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "frustra/canonical.hpp"
#include "frustra/io.hpp"

namespace frustra::cli {

namespace {

struct Config {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string bases_path;
  int k = 0;
  int n = 0;
  int max_vertices = 24;
  int max_base = -1;
  int jobs = 0;
  int entry = -1;
  bool all_min_sigs = false;
  bool no_prune = false;
  bool no_verify = false;
  bool count_only = false;
  std::vector<int> parts{1, 2};
};

Json read_json(const std::string& path) {
  std::ifstream f;
  std::istream* in = &std::cin;
  if (path != "-") {
    f.open(path);
    if (!f) throw GraphError("cannot open " + path);
    in = &f;
  }
  try {
    return Json::parse(*in);
  } catch (const Json::parse_error& e) {
    throw GraphError(path + ": " + e.what());
  }
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw GraphError("cannot write " + cfg.output);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

CriticalityOptions criticality_options(const Config& cfg) {
  CriticalityOptions co;
  co.max_vertices = cfg.max_vertices;
  co.jobs = cfg.jobs;
  return co;
}

int cmd_index(const Config& cfg, std::ostream& out) {
  const auto g = graph_from_json(read_json(cfg.input));
  FrustrationOptions fo;
  fo.max_vertices = cfg.max_vertices;
  fo.jobs = cfg.jobs;
  fo.list_signatures = cfg.all_min_sigs;
  const auto r = frustration_index(g, fo);
  Json j{{"index", r.index}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  if (cfg.all_min_sigs) {
    Json sigs = Json::array();
    for (const auto& s : r.minimum_signatures) sigs.push_back(graph_to_json(s));
    j["minimum_signatures"] = std::move(sigs);
  }
  emit(cfg, out, j.dump());
  return Ok;
}

int cmd_critical(const Config& cfg, std::ostream& out) {
  const auto g = graph_from_json(read_json(cfg.input));
  emit(cfg, out, criticality_to_json(is_critical(g, criticality_options(cfg))).dump());
  return Ok;
}

int cmd_prime(const Config& cfg, std::ostream& out) {
  const auto g = graph_from_json(read_json(cfg.input));
  emit(cfg, out, prime_to_json(prime_report(g, criticality_options(cfg))).dump());
  return Ok;
}

int cmd_enumerate(const Config& cfg, std::ostream& out, std::ostream& err) {
  EnumerationOptions eo;
  eo.k = cfg.k;
  eo.max_base = cfg.max_base;
  eo.prune = !cfg.no_prune;
  eo.jobs = cfg.jobs;
  eo.run_verifiers = !cfg.no_verify;
  if (cfg.max_vertices != 24) eo.max_vertices = cfg.max_vertices;
  if (!cfg.bases_path.empty()) {
    std::ifstream f(cfg.bases_path);
    if (!f) throw GraphError("cannot open " + cfg.bases_path);
    eo.bases = read_bases(f);
  }
  const auto cat = enumerate_prime(eo);
  emit(cfg, out, catalog_to_json(cat).dump());
  int failing = 0;
  for (const auto& e : cat.entries) failing += e.verifiers_ok() ? 0 : 1;
  err << "k=" << cat.k << " entries=" << cat.entries.size() << " complete=" << (cat.complete ? "yes" : "no")
      << " verifier_failures=" << failing << '\n';
  for (const auto& e : cat.entries)
    for (const auto& r : e.reports)
      if (!r.ok())
        err << "  " << e.key << ": " << r.name << ": " << (r.witnesses.empty() ? r.note : r.witnesses.front()) << '\n';
  return failing ? MathFailed : Ok;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto ce = embedding_from_json(read_json(cfg.input));
  const auto reports = run_all_verifiers(ce);
  Json arr = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    if (!r.ok()) {
      ok = false;
      err << r.name << ": " << (r.witnesses.empty() ? r.note : r.witnesses.front()) << '\n';
    }
  }
  emit(cfg, out, Json{{"k", ce.k}, {"ok", ok}, {"reports", std::move(arr)}}.dump());
  return ok ? Ok : MathFailed;
}

int cmd_compositions(const Config& cfg, std::ostream& out) {
  const auto comps = enumerate_cyclic_compositions(cfg.n, cfg.parts);
  Json j{{"n", cfg.n}, {"parts", cfg.parts}, {"count", comps.size()}};
  std::vector<int> sorted = cfg.parts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted == std::vector<int>{1, 2}) j["closed_form"] = count_cyclic_compositions_closed_form(cfg.n);
  if (!cfg.count_only) {
    Json list = Json::array();
    for (const auto& c : comps) list.push_back(c.parts);
    j["compositions"] = std::move(list);
  }
  emit(cfg, out, j.dump());
  return Ok;
}

int cmd_bounds(const Config& cfg, std::ostream& out) {
  Json j = bounds_to_json(bounds(cfg.k));
  j["admissible_sequences"] = count_admissible_weight_sequences(cfg.k);
  emit(cfg, out, j.dump());
  return Ok;
}

int cmd_export(const Config& cfg, std::ostream& out) {
  const Json in = read_json(cfg.input);
  const bool dot = cfg.format == "dot";
  if (in.contains("entries")) {
    const auto cat = catalog_from_json(in);
    std::vector<const CatalogEntry*> pick;
    if (cfg.entry >= 0) {
      if (cfg.entry >= static_cast<int>(cat.entries.size())) throw GraphError("no catalog entry " + std::to_string(cfg.entry));
      pick.push_back(&cat.entries[cfg.entry]);
    } else {
      for (const auto& e : cat.entries) pick.push_back(&e);
    }
    if (dot) {
      std::string text;
      for (const auto* e : pick) text += e->embedding ? to_dot(*e->embedding) : to_dot(e->graph);
      emit(cfg, out, text);
    } else {
      Json arr = Json::array();
      for (const auto* e : pick)
        arr.push_back(Json{{"canonical_key", canonical_key(e->graph)},
                           {"graph", graph_to_json(e->graph)},
                           {"embedding", e->embedding ? embedding_to_json(*e->embedding) : Json(nullptr)}});
      emit(cfg, out, arr.dump());
    }
    return Ok;
  }
  if (in.contains("rotation")) {
    const auto ce = embedding_from_json(in);
    emit(cfg, out, dot ? to_dot(ce) : embedding_to_json(ce).dump());
    return Ok;
  }
  const auto g = graph_from_json(in);
  emit(cfg, out, dot ? to_dot(g) : Json{{"canonical_key", canonical_key(g)}, {"graph", graph_to_json(g)}}.dump());
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"signed graph frustration toolkit", "frustra"};
  app.require_subcommand(1);
  auto positive = CLI::PositiveNumber;

  auto* index = app.add_subcommand("index", "frustration index of a signed graph");
  index->add_option("graph", cfg.input, "graph JSON (- for stdin)")->required();
  index->add_flag("--all-min-sigs", cfg.all_min_sigs, "list every minimum signature");

  auto* critical = app.add_subcommand("critical", "criticality report");
  critical->add_option("graph", cfg.input)->required();
  auto* prime = app.add_subcommand("prime", "primality report");
  prime->add_option("graph", cfg.input)->required();

  for (auto* sub : {index, critical, prime}) {
    sub->add_option("--max-vertices", cfg.max_vertices, "exact search bound")->check(positive);
  }

  auto* enumerate = app.add_subcommand("enumerate", "enumerate prime critically k-frustrated graphs");
  enumerate->add_option("--k", cfg.k)->required()->check(CLI::Range(1, 5));
  enumerate->add_option("--max-base", cfg.max_base, "vertices of the plane cubic base (default: 14, or 10 for k = 2, 8 for k >= 4)")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-vertices", cfg.max_vertices, "exact search bound on assembled graphs")->check(positive);
  enumerate->add_flag("--no-prune", cfg.no_prune, "disable weight pruning");
  enumerate->add_flag("--no-verify", cfg.no_verify, "skip the structural verifiers");
  enumerate->add_option("--bases", cfg.bases_path, "plane cubic bases file")->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "run the structural verifiers on a canonical embedding");
  verify->add_option("embedding", cfg.input)->required();

  auto* compositions = app.add_subcommand("compositions", "cyclic compositions");
  compositions->add_option("--n", cfg.n)->required()->check(positive);
  compositions->add_option("--parts", cfg.parts)->delimiter(',')->check(positive);
  compositions->add_flag("--count-only", cfg.count_only);

  auto* bounds_cmd = app.add_subcommand("bounds", "face-count bounds");
  bounds_cmd->add_option("--k", cfg.k)->required()->check(CLI::IsMember({4, 5}));

  auto* exporter = app.add_subcommand("export", "re-emit a graph, embedding or catalog");
  exporter->add_option("input", cfg.input)->required();
  exporter->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));
  exporter->add_option("--entry", cfg.entry, "catalog entry index")->check(CLI::NonNegativeNumber);

  for (auto* sub : {index, critical, prime, enumerate, verify, compositions, bounds_cmd, exporter}) {
    sub->add_option("--out", cfg.output, "output file");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0: all)")->check(CLI::NonNegativeNumber);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (*index) return cmd_index(cfg, out);
    if (*critical) return cmd_critical(cfg, out);
    if (*prime) return cmd_prime(cfg, out);
    if (*enumerate) return cmd_enumerate(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*compositions) return cmd_compositions(cfg, out);
    if (*bounds_cmd) return cmd_bounds(cfg, out);
    if (*exporter) return cmd_export(cfg, out);
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return ResourceLimit;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return MathFailed;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return MathFailed;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
    return Usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  }
  return Usage;
}

}  // namespace frustra::cli
