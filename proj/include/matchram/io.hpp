#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "matchram/coloured.hpp"
#include "matchram/graph.hpp"

namespace matchram {

/// Plain text edge list: first line "n m", then one "u v" line per edge in
/// canonical order. Writing a parsed graph reproduces the bytes exactly.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

/// {"edges":[[u,v],...],"n":n} with edges canonically sorted.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// {"layers":[[...],[...],...],"n":n,"q":q}, layer 0 first. Loaded against a
/// host graph when one is supplied; otherwise the union of all layers is the
/// host.
nlohmann::json coloured_to_json(const ColouredGraph& cg);
ColouredGraph coloured_from_json(const nlohmann::json& j, const Graph* host = nullptr);

}  // namespace matchram
