#pragma once

#include <string>
#include <vector>

#include "combinorm/graph.hpp"

namespace combinorm {

/// All graphs on 1..n vertices for n = 1..max_n, one per isomorphism class,
/// ordered by size then canonical code. Built by extending every class of
/// size n−1 with a new vertex in all possible ways.
std::vector<Graph> generate_corpus(int max_n);

/// Text format: one "n code" line per graph, code as in graph_code; '#'
/// starts a comment.
std::string format_corpus(const std::vector<Graph>& graphs);
std::vector<Graph> parse_corpus(const std::string& text);
std::vector<Graph> load_corpus(const std::string& path);

}  // namespace combinorm
