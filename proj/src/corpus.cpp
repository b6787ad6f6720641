#include "combinorm/corpus.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "combinorm/errors.hpp"

namespace combinorm {

std::vector<Graph> generate_corpus(int max_n) {
  if (max_n < 0 || max_n > 10) throw InvalidArgument("corpus size must be in 0..10");
  std::vector<Graph> out;
  std::vector<std::uint64_t> level{0};  // the single graph on one vertex
  if (max_n >= 1) out.push_back(graph_from_code(1, 0));
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph base = graph_from_code(n - 1, code);
      auto edges = base.edges();
      IdSet vs = base.vertices();
      vs.push_back(n);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
        auto es = edges;
        for (int v = 1; v < n; ++v) {
          if (nb >> (v - 1) & 1U) es.emplace_back(v, n);
        }
        next.insert(canonical_code(Graph(vs, es)));
      }
    }
    level.assign(next.begin(), next.end());
    for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  }
  return out;
}

std::string format_corpus(const std::vector<Graph>& graphs) {
  std::ostringstream os;
  os << "# n code (upper-triangle adjacency bits, pairs (1,2),(1,3),...,(2,3),...)\n";
  for (const auto& g : graphs) os << g.size() << ' ' << graph_code(g) << '\n';
  return os.str();
}

std::vector<Graph> parse_corpus(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Graph> out;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int n = 0;
    std::uint64_t code = 0;
    if (!(ls >> n)) continue;
    if (!(ls >> code)) throw InvalidArgument("corpus line " + std::to_string(lineno) + ": missing code");
    out.push_back(graph_from_code(n, code));
  }
  return out;
}

std::vector<Graph> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open corpus file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

}  // namespace combinorm
