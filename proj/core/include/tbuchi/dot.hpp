#pragma once

#include <cstddef>
#include <string>

#include "tbuchi/automaton.hpp"

namespace tbuchi {

/// Graphviz rendering of the reachable zone graph.  Stops with
/// MaxNodesExceeded when the graph grows beyond max_nodes (0 = no limit).
std::string render_dot_zg(const Tba& a, std::size_t max_nodes = 0);

/// Graphviz rendering of the reachable guessing zone graph.  Guess-dropping
/// edges are drawn dashed.
std::string render_dot_gzg(const Tba& a, std::size_t max_nodes = 0);

}  // namespace tbuchi
