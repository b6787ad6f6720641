#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "combinorm/duality.hpp"
#include "combinorm/emulation.hpp"
#include "combinorm/family.hpp"
#include "combinorm/graph.hpp"
#include "combinorm/orlicz.hpp"
#include "combinorm/rat.hpp"
#include "combinorm/sierpinski.hpp"

namespace combinorm::io {

using json = nlohmann::ordered_json;

/// Reads a whole file; throws InvalidArgument when it cannot be opened.
std::string read_file(const std::string& path);
json read_json(const std::string& path);

/// Rationals are "p/q" strings, or "p" when q = 1; integers are accepted on
/// input.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const IdSet& s);
IdSet set_from_json(const json& j);

/// {"3": "1/2", …}
json to_json(const RatVector& x);
RatVector vector_from_json(const json& j);

/// {"vertices": [...], "edges": [[u, v], ...]} or {"adjacency": {"1": [2, 3], ...}}.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);
/// JSON when the text starts with '{', DIMACS otherwise.
Graph graph_from_text(const std::string& text);
Graph load_graph(const std::string& path);

/// {"universe": [ids] | {"bound": N}, "kind": …, …}. Kinds: "explicit"
/// (with "sets"), "singletons", "full", "cliques" / "anticliques" (with
/// "graph"), "schreier" (with "alpha" and optional "variant"), "perp" (with
/// "of"), "farah" / "union" (with "parts": [{"ids": […], "family": …}]),
/// "chains" / "antichains" (of the product order, with "n").
Family family_from_json(const json& j);
/// Explicit form listing the maximal members over the universe.
json family_to_json(const Family& f);

/// {"values": ["0", "-1", …]} or {"generator": "stern-brocot" | "cantor"}.
RationalInjection injection_from_json(const json& j);
json to_json(const RationalInjection& f, std::size_t prefix = 0);

/// {"blocks": [{"label": t, "size": s}], "theta": ["…"], "metadata": {…}}.
json to_json(const Emulation& e);
Emulation emulation_from_json(const json& j);

/// [{"p": "2", "c": "1"}, …] lists the power terms of one function used at
/// every index. The object form {"functions": [[terms], …], "repeat": true}
/// gives φ_1, φ_2, … and repeats the last one when "repeat" is set.
OrliczSeq orlicz_from_json(const json& j);
json to_json(const OrliczSeq& phi);

json to_json(const DualityRecord& r);
json to_json(const SweepSummary& s);

}  // namespace combinorm::io
