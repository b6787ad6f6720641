#include <omp.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "combinorm/corpus.hpp"
#include "combinorm/duality.hpp"
#include "combinorm/emulation.hpp"
#include "combinorm/errors.hpp"
#include "combinorm/extremals.hpp"
#include "combinorm/io.hpp"
#include "combinorm/norms.hpp"
#include "combinorm/orlicz.hpp"
#include "combinorm/sierpinski.hpp"

using namespace combinorm;
using io::json;

namespace {

// Exit codes.
constexpr int ok = 0;
constexpr int check_failed = 1;
constexpr int input_error = 2;
constexpr int invariant_violation = 3;

struct Options {
  bool json_out = false;
  std::string family, graph, vector, input, injection, host, guest, emulation, phi, corpus;
  std::string ground, set, alpha = "1", variant = "standard", method = "both", op = "base", construct, hole, q;
  std::string labels, format = "json";
  std::vector<std::string> parts;
  int n = 0, times = 1, truncation = 0, max_block = 3, max_size = 6, max_n = 7, threads = 0;
  bool increasing = false;
};

std::string cycle_text(const std::vector<int>& c) {
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < c.size(); ++i) ss << (i ? " " : "") << c[i];
  ss << ')';
  return ss.str();
}

std::string set_text(const IdSet& s) { return to_string(s); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// Family, ground set and vector from --input or from the separate flags.
NormContext load_context(const Options& o, RatVector& x) {
  json family, ground, vector;
  if (!o.input.empty()) {
    const json in = io::read_json(o.input);
    family = in.at("family");
    if (in.contains("ground")) ground = in.at("ground");
    vector = in.at("vector");
  } else {
    if (o.family.empty() || o.vector.empty()) throw InvalidArgument("give --input or both --family and --vector");
    family = io::read_json(o.family);
    vector = io::read_json(o.vector);
  }
  Family f = io::family_from_json(family);
  x = io::vector_from_json(vector);
  IdSet v = !ground.is_null() ? io::set_from_json(ground) : !o.ground.empty() ? parse_set(o.ground) : f.universe().ids();
  return NormContext(std::move(f), std::move(v));
}

Family load_family(const Options& o) {
  if (o.family.empty()) throw InvalidArgument("--family is required");
  return io::family_from_json(io::read_json(o.family));
}

Graph load_graph(const Options& o) {
  if (o.graph.empty()) throw InvalidArgument("--graph is required");
  return io::load_graph(o.graph);
}

int value_output(const Options& o, const Rat& value) {
  if (o.json_out) {
    print(json{{"value", value.str()}});
  } else {
    std::cout << value << '\n';
  }
  return ok;
}

int cmd_norm(const Options& o, bool dual) {
  RatVector x;
  const NormContext ctx = load_context(o, x);
  return value_output(o, dual ? dual_norm(ctx, x) : norm(ctx, x));
}

int cmd_perp(const Options& o) {
  const Family f = load_family(o);
  print(io::family_to_json(perp(f, o.truncation > 0 ? o.truncation : f.universe().bound())));
  return ok;
}

int cmd_graphgen(const Options& o) {
  const Family f = load_family(o);
  const auto r = is_graph_generated(f, o.truncation > 0 ? o.truncation : f.universe().bound());
  if (o.json_out) {
    print(json{{"graph_generated", r.generated}, {"witness", r.witness ? io::to_json(*r.witness) : json(nullptr)}});
  } else if (r.generated) {
    std::cout << "graph generated\n";
  } else {
    std::cout << "not graph generated: " << set_text(*r.witness) << " is a clique of the pair graph but not a member\n";
  }
  return r.generated ? ok : check_failed;
}

int cmd_max_elements(const Options& o) {
  const Family f = load_family(o);
  const IdSet ground = o.ground.empty() ? f.universe().ids() : parse_set(o.ground);
  const auto sets = max_elements(f, ground);
  if (o.json_out) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(io::to_json(s));
    print(out);
  } else {
    for (const auto& s : sets) std::cout << set_text(s) << '\n';
  }
  return ok;
}

std::string imperfection_witness(const Graph& g) {
  if (auto h = find_odd_hole(g)) return "odd hole " + cycle_text(*h);
  if (auto a = find_odd_antihole(g)) return "odd antihole " + cycle_text(*a);
  return "chromatic number exceeds clique number on an induced subgraph";
}

int cmd_perfect(const Options& o) {
  const Graph g = load_graph(o);
  std::optional<bool> spgt, chi;
  if (o.method == "spgt" || o.method == "both") spgt = is_perfect(g, PerfectMethod::spgt);
  if (o.method == "chi-omega" || o.method == "both") chi = is_perfect(g, PerfectMethod::chi_omega);
  if (!spgt && !chi) throw InvalidArgument("unknown method " + o.method);
  if (spgt && chi && *spgt != *chi) throw EquivalenceViolation("the recognition methods disagree");
  const bool perfect = spgt ? *spgt : *chi;
  if (o.json_out) {
    json out{{"perfect", perfect}};
    if (!perfect) out["witness"] = imperfection_witness(g);
    print(out);
  } else if (perfect) {
    std::cout << "perfect\n";
  } else {
    std::cout << "imperfect: " << imperfection_witness(g) << '\n';
  }
  return perfect ? ok : check_failed;
}

int cmd_duality(const Options& o) {
  const Graph g = load_graph(o);
  const DualityRecord r = duality_report(g);
  if (o.json_out) {
    print(io::to_json(r));
    return ok;
  }
  const json j = io::to_json(r);
  std::cout << "check\tvalue\n";
  for (const auto& [k, v] : j.items()) std::cout << k << '\t' << v.dump() << '\n';
  return ok;
}

json check_json(const ExtremeCheck& c) {
  json tight = json::array();
  for (const auto& s : c.tight_cliques) tight.push_back(io::to_json(s));
  json normals = json::array();
  for (const auto& n : c.normals) normals.push_back(io::to_json(n));
  return json{{"extreme", c.extreme}, {"rank", c.rank}, {"tight_cliques", tight}, {"normals", normals}};
}

int cmd_extreme(const Options& o) {
  if (o.construct.empty()) {
    if (o.vector.empty()) throw InvalidArgument("--vector is required");
    const Graph g = load_graph(o);
    const ExtremeCheck c = is_extreme(g, io::vector_from_json(io::read_json(o.vector)));
    if (o.json_out) {
      print(check_json(c));
    } else {
      std::cout << (c.extreme ? "extreme" : "not extreme") << "\nrank\t" << c.rank << " of " << g.size() << '\n';
      for (const auto& s : c.tight_cliques) std::cout << "tight\t" << set_text(s) << '\n';
    }
    return c.extreme ? ok : check_failed;
  }
  json out;
  if (o.construct == "hole") {
    const Graph g = load_graph(o);
    std::vector<int> hole;
    if (!o.hole.empty()) {
      std::stringstream ss(o.hole);
      std::string item;
      while (std::getline(ss, item, ',')) hole.push_back(std::stoi(item));
    } else if (auto h = find_odd_hole(g)) {
      hole = *h;
    } else {
      throw NotAnOddHole("the graph has no odd hole");
    }
    const RatVector x = extend_half(g, hole);
    out = json{{"graph", io::to_json(g)}, {"vector", io::to_json(x)}, {"check", check_json(is_extreme(g, x))}};
  } else if (o.construct == "antihole") {
    const AntiholePoint p = antihole_point(o.n);
    out = json{{"graph", io::to_json(p.graph)},
               {"vector", io::to_json(p.x)},
               {"determinant", p.determinant.str()},
               {"extreme", p.extreme}};
  } else if (o.construct == "rational") {
    const RationalGadget r = rational_gadget(Rat::parse(o.q));
    out = json{{"graph", io::to_json(r.graph)},
               {"vector", io::to_json(r.x)},
               {"w", r.w},
               {"determinant", r.determinant ? json(r.determinant->str()) : json(nullptr)},
               {"extreme", r.extreme}};
  } else {
    throw InvalidArgument("unknown construction " + o.construct);
  }
  print(out);
  return out.contains("extreme") ? (out["extreme"].get<bool>() ? ok : check_failed)
                                 : (out["check"]["extreme"].get<bool>() ? ok : check_failed);
}

Emulation load_emulation(const std::string& path) { return io::emulation_from_json(io::read_json(path)); }

std::vector<Emulation> load_parts(const Options& o) {
  if (o.parts.empty()) throw InvalidArgument("--parts is required");
  std::vector<Emulation> parts;
  for (const auto& p : o.parts) parts.push_back(load_emulation(p));
  return parts;
}

int cmd_emulate(const Options& o) {
  Emulation e;
  if (o.op == "dstar" || o.op == "union" || o.op == "farah") {
    const auto parts = load_parts(o);
    e = o.op == "dstar" ? dstar_transform(parts) : o.op == "union" ? union_shift(parts) : farah_shift(parts);
  } else if (o.op == "base" || o.op == "schreier") {
    if (!o.input.empty()) {
      e = load_emulation(o.input);
    } else if (!o.family.empty()) {
      auto found = search_emulation(load_family(o), o.max_block);
      if (!found) {
        std::cerr << "no emulation of the family within the search space\n";
        return check_failed;
      }
      e = *found;
    } else {
      if (o.labels.empty()) throw InvalidArgument("give --input, --family or --labels");
      e = unit_emulation(parse_set(o.labels), o.increasing);
    }
    if (o.op == "schreier") {
      for (int k = 0; k < o.times; ++k) e = schreier_transform(e);
    }
  } else {
    throw InvalidArgument("unknown operation " + o.op);
  }
  print(io::to_json(e));
  return ok;
}

int cmd_verify_emulation(const Options& o) {
  if (o.emulation.empty()) throw InvalidArgument("--emulation is required");
  const auto r = verify_emulation(load_emulation(o.emulation), load_family(o), static_cast<std::size_t>(o.max_size));
  if (o.json_out) {
    print(json{{"ok", r.ok}, {"counterexample", r.counterexample ? io::to_json(*r.counterexample) : json(nullptr)}});
  } else if (r.ok) {
    std::cout << "verified\n";
  } else {
    std::cout << "fails at " << set_text(*r.counterexample) << '\n';
  }
  return r.ok ? ok : check_failed;
}

int cmd_search_emulation(const Options& o) {
  auto found = search_emulation(load_family(o), o.max_block);
  if (!found) {
    if (o.json_out) {
      print(json(nullptr));
    } else {
      std::cout << "none\n";
    }
    return check_failed;
  }
  print(io::to_json(*found));
  return ok;
}

SierpinskiContext load_injection(const std::string& path) {
  if (path.empty()) throw InvalidArgument("an injection file is required");
  return SierpinskiContext(io::injection_from_json(io::read_json(path)));
}

int cmd_sierpinski_norm(const Options& o) {
  if (o.vector.empty()) throw InvalidArgument("--vector is required");
  return value_output(o, chain_norm(load_injection(o.injection), io::vector_from_json(io::read_json(o.vector))));
}

int cmd_sierpinski_graph(const Options& o) {
  const Graph g = sierpinski_graph(load_injection(o.injection), static_cast<std::size_t>(o.n));
  if (o.format == "dimacs") {
    std::cout << to_dimacs(g);
  } else {
    print(io::to_json(g));
  }
  return ok;
}

int cmd_sierpinski_embed(const Options& o) {
  const auto map = embed(load_injection(o.host), load_injection(o.guest), static_cast<std::size_t>(o.n));
  json out = json::object();
  for (std::size_t i = 0; i < map.size(); ++i) out[std::to_string(i + 1)] = map[i];
  if (o.json_out) {
    print(out);
  } else {
    for (std::size_t i = 0; i < map.size(); ++i) std::cout << i + 1 << '\t' << map[i] << '\n';
  }
  return ok;
}

SchreierVariant variant_of(const Options& o) {
  if (o.variant == "standard") return SchreierVariant::standard;
  if (o.variant == "star") return SchreierVariant::star;
  throw InvalidArgument("unknown variant " + o.variant);
}

int cmd_schreier_member(const Options& o) {
  const bool member = schreier_contains(Ordinal::parse(o.alpha), variant_of(o), parse_set(o.set));
  if (o.json_out) {
    print(json{{"member", member}});
  } else {
    std::cout << (member ? "member" : "not a member") << '\n';
  }
  return member ? ok : check_failed;
}

int cmd_schreier_enumerate(const Options& o) {
  if (o.n < 0) throw InvalidArgument("--n must be non-negative");
  const Family f = schreier(Ordinal::parse(o.alpha), variant_of(o), o.n);
  const auto sets = members_within(f, f.universe().ids());
  if (o.json_out) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(io::to_json(s));
    print(out);
  } else {
    for (const auto& s : sets) std::cout << set_text(s) << '\n';
  }
  return ok;
}

int cmd_corpus_sweep(const Options& o) {
  const std::string path = o.corpus.empty() ? std::string(COMBINORM_DATA_DIR) + "/graphs_le7.txt" : o.corpus;
  const SweepSummary s = corpus_sweep(load_corpus(path), {}, o.threads);
  if (o.json_out) {
    print(io::to_json(s));
  } else {
    std::cout << "n\tperfect\timperfect\n";
    for (const auto& [n, c] : s.by_size) std::cout << n << '\t' << c.first << '\t' << c.second << '\n';
    std::cout << "total\t" << s.perfect << '\t' << s.imperfect << '\n';
    std::cout << "first disagreement\t" << s.first_disagreement.value_or("none") << '\n';
  }
  return s.first_disagreement ? invariant_violation : ok;
}

int cmd_corpus_generate(const Options& o) {
  std::cout << format_corpus(generate_corpus(o.max_n));
  return ok;
}

int cmd_orlicz_norm(const Options& o) {
  if (o.phi.empty() || o.vector.empty()) throw InvalidArgument("--phi and --vector are required");
  const auto phi = io::orlicz_from_json(io::read_json(o.phi));
  const LuxNorm r = lux_norm(phi, io::vector_from_json(io::read_json(o.vector)));
  if (o.json_out) {
    print(r.exact() ? json{{"value", r.lo.str()}} : json{{"lo", r.lo.str()}, {"hi", r.hi.str()}});
  } else if (r.exact()) {
    std::cout << r.lo << '\n';
  } else {
    std::cout << "[" << r.lo << ", " << r.hi << "]\n";
  }
  return ok;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations with combinatorial norms, families and graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "JSON output");
  std::function<int()> action;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> f) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&action, f] { action = f; });
    return c;
  };
  auto add_context = [&](CLI::App* c) {
    c->add_option("--input", o.input, "JSON with family, ground and vector");
    c->add_option("--family", o.family, "family JSON");
    c->add_option("--vector", o.vector, "vector JSON");
    c->add_option("--ground", o.ground, "ground set, e.g. 1,2,3");
  };

  add_context(sub(&app, "norm", "family norm of a vector", [&] { return cmd_norm(o, false); }));
  add_context(sub(&app, "dual-norm", "dual norm of a vector", [&] { return cmd_norm(o, true); }));
  auto perp_cmd = sub(&app, "perp", "orthogonal family, listed by maximal members", [&] { return cmd_perp(o); });
  perp_cmd->add_option("--family", o.family)->required();
  perp_cmd->add_option("--truncation", o.truncation);
  auto gg = sub(&app, "graphgen-check", "is the family generated by its pair graph", [&] { return cmd_graphgen(o); });
  gg->add_option("--family", o.family)->required();
  gg->add_option("--truncation", o.truncation);
  auto me = sub(&app, "max-elements", "maximal members inside a ground set", [&] { return cmd_max_elements(o); });
  me->add_option("--family", o.family)->required();
  me->add_option("--ground", o.ground);

  auto pc = sub(&app, "perfect-check", "perfection verdict with witness", [&] { return cmd_perfect(o); });
  pc->add_option("--graph", o.graph, "graph file, JSON or DIMACS")->required();
  pc->add_option("--method", o.method)->check(CLI::IsMember({"spgt", "chi-omega", "both"}));
  auto dr = sub(&app, "duality-report", "the five duality checks", [&] { return cmd_duality(o); });
  dr->add_option("--graph", o.graph)->required();

  auto ex = sub(&app, "extreme", "verify or construct extreme points", [&] { return cmd_extreme(o); });
  ex->add_option("--graph", o.graph);
  ex->add_option("--vector", o.vector);
  ex->add_option("--construct", o.construct)->check(CLI::IsMember({"hole", "antihole", "rational"}));
  ex->add_option("--hole", o.hole, "hole in cycle order, e.g. 1,2,3,4,5");
  ex->add_option("--n", o.n, "antihole parameter");
  ex->add_option("--q", o.q, "rational value for the gadget");

  auto em = sub(&app, "emulate", "build emulations", [&] { return cmd_emulate(o); });
  em->add_option("--op", o.op)->check(CLI::IsMember({"base", "schreier", "dstar", "union", "farah"}));
  em->add_option("--input", o.input, "emulation JSON");
  em->add_option("--family", o.family, "family JSON, emulated by search");
  em->add_option("--labels", o.labels, "labels of a unit emulation");
  em->add_flag("--increasing", o.increasing, "unit emulation of the full family");
  em->add_option("--times", o.times);
  em->add_option("--parts", o.parts, "emulation JSON files");
  em->add_option("--max-block", o.max_block);
  auto ve = sub(&app, "verify-emulation", "check an emulation against a family", [&] { return cmd_verify_emulation(o); });
  ve->add_option("--emulation", o.emulation)->required();
  ve->add_option("--family", o.family)->required();
  ve->add_option("--max-size", o.max_size);
  auto se = sub(&app, "search-emulation", "exhaustive emulation search", [&] { return cmd_search_emulation(o); });
  se->add_option("--family", o.family)->required();
  se->add_option("--max-block", o.max_block);

  CLI::App* si = app.add_subcommand("sierpinski", "Sierpinski graphs and norms");
  si->require_subcommand(1);
  auto sn = sub(si, "norm", "chain norm", [&] { return cmd_sierpinski_norm(o); });
  sn->add_option("--injection", o.injection)->required();
  sn->add_option("--vector", o.vector)->required();
  auto sg = sub(si, "graph", "graph on 1..n", [&] { return cmd_sierpinski_graph(o); });
  sg->add_option("--injection", o.injection)->required();
  sg->add_option("--n", o.n)->required();
  sg->add_option("--format", o.format)->check(CLI::IsMember({"json", "dimacs"}));
  auto sm = sub(si, "embed", "increasing induced embedding", [&] { return cmd_sierpinski_embed(o); });
  sm->add_option("--host", o.host)->required();
  sm->add_option("--guest", o.guest)->required();
  sm->add_option("--n", o.n)->required();

  CLI::App* sc = app.add_subcommand("schreier", "Schreier families");
  sc->require_subcommand(1);
  auto smb = sub(sc, "member", "membership", [&] { return cmd_schreier_member(o); });
  smb->add_option("--alpha", o.alpha);
  smb->add_option("--variant", o.variant)->check(CLI::IsMember({"standard", "star"}));
  smb->add_option("--set", o.set)->required();
  auto sen = sub(sc, "enumerate", "members inside 1..n", [&] { return cmd_schreier_enumerate(o); });
  sen->add_option("--alpha", o.alpha);
  sen->add_option("--variant", o.variant)->check(CLI::IsMember({"standard", "star"}));
  sen->add_option("--n", o.n)->required();

  CLI::App* co = app.add_subcommand("corpus", "graph corpus");
  co->require_subcommand(1);
  auto cs = sub(co, "sweep", "duality report over the corpus", [&] { return cmd_corpus_sweep(o); });
  cs->add_option("--corpus", o.corpus, "corpus file");
  cs->add_option("--threads", o.threads);
  auto cg = sub(co, "generate", "graphs up to isomorphism", [&] { return cmd_corpus_generate(o); });
  cg->add_option("--max-n", o.max_n);

  CLI::App* orl = app.add_subcommand("orlicz", "Musielak-Orlicz sequences");
  orl->require_subcommand(1);
  auto on = sub(orl, "norm", "Luxemburg norm", [&] { return cmd_orlicz_norm(o); });
  on->add_option("--phi", o.phi)->required();
  on->add_option("--vector", o.vector)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("COMBINORM_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }
  try {
    return run(argc, argv);
  } catch (const EquivalenceViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return invariant_violation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number " << e.what() << '\n';
    return input_error;
  }
}
