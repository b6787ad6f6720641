#include "combinorm/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "combinorm/errors.hpp"

namespace combinorm::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int to_int(const json& j) {
  if (!j.is_number_integer()) throw InvalidArgument("expected an integer, got " + j.dump());
  return j.get<int>();
}

std::string to_str(const json& j) {
  if (!j.is_string()) throw InvalidArgument("expected a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return Rat::parse(to_str(j));
}

json to_json(const IdSet& s) {
  json out = json::array();
  for (int v : s) out.push_back(v);
  return out;
}

IdSet set_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of ids, got " + j.dump());
  std::vector<int> ids;
  for (const auto& v : j) ids.push_back(to_int(v));
  return make_set(ids);
}

json to_json(const RatVector& x) {
  json out = json::object();
  for (const auto& [v, value] : x) out[std::to_string(v)] = value.str();
  return out;
}

RatVector vector_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("expected a vector object, got " + j.dump());
  RatVector x;
  for (const auto& [key, value] : j.items()) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InvalidArgument("vector key \"" + key + "\" is not an id");
    }
    x.set(id, rat_from_json(value));
  }
  return x;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"vertices", to_json(g.vertices())}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  if (j.is_object() && j.contains("adjacency")) {
    std::vector<int> vs;
    for (const auto& [key, nbrs] : j.at("adjacency").items()) {
      const int v = std::stoi(key);
      vs.push_back(v);
      for (int u : set_from_json(nbrs)) {
        vs.push_back(u);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(make_set(vs), edges);
  }
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("edge must be a pair, got " + e.dump());
    edges.emplace_back(to_int(e[0]), to_int(e[1]));
  }
  return Graph(set_from_json(require(j, "vertices")), edges);
}

Graph graph_from_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw InvalidArgument(e.what());
    }
  }
  return parse_dimacs(text);
}

Graph load_graph(const std::string& path) { return graph_from_text(read_file(path)); }

namespace {

Universe universe_from_json(const json& j) {
  if (j.is_array()) return Universe::explicit_ids(set_from_json(j));
  return Universe::bounded(to_int(require(j, "bound")));
}

SchreierVariant variant_from_json(const json& j) {
  if (!j.contains("variant")) return SchreierVariant::standard;
  const std::string v = to_str(j.at("variant"));
  if (v == "standard") return SchreierVariant::standard;
  if (v == "star") return SchreierVariant::star;
  throw InvalidArgument("unknown Schreier variant \"" + v + "\"");
}

std::vector<FamilyPart> parts_from_json(const json& j) {
  std::vector<FamilyPart> parts;
  for (const auto& p : require(j, "parts")) {
    parts.emplace_back(set_from_json(require(p, "ids")), family_from_json(require(p, "family")));
  }
  return parts;
}

}  // namespace

Family family_from_json(const json& j) {
  const std::string kind = to_str(require(j, "kind"));
  if (kind == "explicit") {
    const Universe u = universe_from_json(require(j, "universe"));
    std::vector<IdSet> sets;
    for (const auto& s : require(j, "sets")) sets.push_back(set_from_json(s));
    return explicit_family(u.ids(), sets);
  }
  if (kind == "singletons") return singletons_family(universe_from_json(require(j, "universe")));
  if (kind == "full") return full_family(universe_from_json(require(j, "universe")));
  if (kind == "cliques") return cliques(graph_from_json(require(j, "graph")));
  if (kind == "anticliques") return anticliques(graph_from_json(require(j, "graph")));
  if (kind == "schreier") {
    const Universe u = universe_from_json(require(j, "universe"));
    const json& a = require(j, "alpha");
    const Ordinal alpha = a.is_number_integer() ? Ordinal::finite(a.get<int>()) : Ordinal::parse(to_str(a));
    return schreier(alpha, variant_from_json(j), u.bound());
  }
  if (kind == "perp") {
    const Family f = family_from_json(require(j, "of"));
    const int t = j.contains("truncation") ? to_int(j.at("truncation")) : f.universe().bound();
    return perp(f, t);
  }
  if (kind == "farah") return farah(parts_from_json(j));
  if (kind == "union") return union_family(parts_from_json(j));
  if (kind == "chains") return poset_chains(product_order(to_int(require(j, "n"))));
  if (kind == "antichains") return poset_antichains(product_order(to_int(require(j, "n"))));
  if (kind == "sierpinski") {
    const SierpinskiContext ctx(injection_from_json(require(j, "injection")));
    return cliques(sierpinski_graph(ctx, static_cast<std::size_t>(to_int(require(j, "n")))));
  }
  throw InvalidArgument("unknown family kind \"" + kind + "\"");
}

json family_to_json(const Family& f) {
  const IdSet& ids = f.universe().ids();
  json sets = json::array();
  for (const IdSet& s : max_elements(f, ids)) sets.push_back(to_json(s));
  json out{{"universe", to_json(ids)}, {"kind", "explicit"}, {"sets", sets}};
  if (!f.label().empty()) out["label"] = f.label();
  if (!f.metadata().empty()) out["metadata"] = f.metadata();
  return out;
}

RationalInjection injection_from_json(const json& j) {
  if (j.is_object() && j.contains("generator")) {
    const std::string g = to_str(j.at("generator"));
    if (g == "stern-brocot") return RationalInjection::stern_brocot();
    if (g == "cantor") return RationalInjection::cantor();
    throw InvalidArgument("unknown generator \"" + g + "\"");
  }
  std::vector<Rat> values;
  for (const auto& v : require(j, "values")) values.push_back(rat_from_json(v));
  return RationalInjection::from_values(values);
}

json to_json(const RationalInjection& f, std::size_t prefix) {
  json values = json::array();
  switch (f.source()) {
    case RationalInjection::Source::explicit_values:
      for (const Rat& r : f.prefix(*f.limit())) values.push_back(r.str());
      return json{{"values", values}};
    case RationalInjection::Source::stern_brocot:
    case RationalInjection::Source::cantor: {
      json out{{"generator", f.source() == RationalInjection::Source::cantor ? "cantor" : "stern-brocot"}};
      if (prefix > 0) {
        for (const Rat& r : f.prefix(prefix)) values.push_back(r.str());
        out["prefix"] = values;
      }
      return out;
    }
  }
  return values;
}

json to_json(const Emulation& e) {
  json blocks = json::array();
  for (const auto& b : e.blocks()) blocks.push_back({{"label", b.label}, {"size", b.size}});
  json theta = json::array();
  for (const Rat& r : e.theta()) theta.push_back(r.str());
  json out{{"blocks", blocks}, {"theta", theta}};
  if (!e.metadata().empty()) out["metadata"] = e.metadata();
  return out;
}

Emulation emulation_from_json(const json& j) {
  std::vector<EmulationBlock> blocks;
  for (const auto& b : require(j, "blocks")) {
    const int size = to_int(require(b, "size"));
    if (size < 0) throw InvalidArgument("block size must be non-negative");
    blocks.push_back({to_int(require(b, "label")), size});
  }
  std::vector<Rat> theta;
  for (const auto& r : require(j, "theta")) theta.push_back(rat_from_json(r));
  Emulation e(blocks, theta);
  if (j.contains("metadata")) {
    for (const auto& [k, v] : j.at("metadata").items()) e = e.with_metadata(k, to_str(v));
  }
  return e;
}

namespace {

OrliczFunction function_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of power terms, got " + j.dump());
  std::vector<PowerTerm> terms;
  for (const auto& t : j) terms.push_back({rat_from_json(require(t, "c")), rat_from_json(require(t, "p"))});
  return OrliczFunction(terms);
}

json function_to_json(const OrliczFunction& f) {
  json out = json::array();
  for (const auto& t : f.terms()) out.push_back({{"p", t.p.str()}, {"c", t.c.str()}});
  return out;
}

}  // namespace

OrliczSeq orlicz_from_json(const json& j) {
  if (j.is_array()) return OrliczSeq({function_from_json(j)}, true);
  std::vector<OrliczFunction> fs;
  for (const auto& f : require(j, "functions")) fs.push_back(function_from_json(f));
  const bool repeat = j.contains("repeat") && j.at("repeat").get<bool>();
  return OrliczSeq(fs, repeat);
}

json to_json(const OrliczSeq& phi) {
  if (phi.repeats() && phi.functions().size() == 1) return function_to_json(phi.functions().front());
  json fs = json::array();
  for (const auto& f : phi.functions()) fs.push_back(function_to_json(f));
  return json{{"functions", fs}, {"repeat", phi.repeats()}};
}

json to_json(const DualityRecord& r) {
  return json{{"perfect_spgt", r.perfect_spgt},   {"perfect_chi_omega", r.perfect_chi_omega},
              {"chvatal", r.chvatal},             {"c0v_all", r.c0v_all},
              {"c2v_all", r.c2v_all},             {"subsets_checked", r.subsets_checked},
              {"sampled", r.sampled}};
}

json to_json(const SweepSummary& s) {
  json by_size = json::array();
  for (const auto& [n, counts] : s.by_size) {
    by_size.push_back({{"n", n}, {"perfect", counts.first}, {"imperfect", counts.second}});
  }
  json out{{"graphs", s.graphs}, {"perfect", s.perfect}, {"imperfect", s.imperfect}, {"by_size", by_size}};
  out["first_disagreement"] = s.first_disagreement ? json(*s.first_disagreement) : json(nullptr);
  return out;
}

}  // namespace combinorm::io
