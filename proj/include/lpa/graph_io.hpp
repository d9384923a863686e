#pragma once

#include <string>

#include "lpa/graph.hpp"

namespace lpa {

/// Line-based text format:
///   graph <name>
///   vertex <id>
///   edge <id> : <src> -> <rng>
///   bundle <id> : <src> -> <rng> * <n|inf>
/// '#' starts a comment when it begins a line or follows whitespace
/// (identifiers may contain '#'). Serialization sorts lines by kind then
/// identifier, so parse . serialize is the identity on serialized graphs.
MultiGraph parse_multigraph(const std::string& text);

/// As parse_multigraph but rejects bundle lines.
Graph parse_graph(const std::string& text);

std::string serialize(const Graph& g);
std::string serialize(const MultiGraph& mg);

MultiGraph load_multigraph_file(const std::string& path);
Graph load_graph_file(const std::string& path);

}  // namespace lpa
