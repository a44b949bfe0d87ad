#include "matchram/io.hpp"

#include <sstream>

#include "matchram/errors.hpp"

namespace matchram {

Graph read_edge_list(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw PreconditionError("edge list: missing header line");
  require(m >= 0, "edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw PreconditionError("edge list: truncated input");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

namespace {

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
  auto out = nlohmann::json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

std::vector<Edge> edges_from_json(const nlohmann::json& j) {
  require(j.is_array(), "json: edge list must be an array");
  std::vector<Edge> out;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, "json: an edge must be a pair");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
  return {{"edges", edges_to_json(g.edges())}, {"n", g.vertex_count()}};
}

Graph graph_from_json(const nlohmann::json& j) {
  require(j.contains("n") && j.contains("edges"), "json: graph needs 'n' and 'edges'");
  return Graph(j.at("n").get<int>(), edges_from_json(j.at("edges")));
}

nlohmann::json coloured_to_json(const ColouredGraph& cg) {
  auto layers = nlohmann::json::array();
  for (int j = 0; j <= cg.colour_count(); ++j) layers.push_back(edges_to_json(cg.layer(j)));
  return {{"layers", layers}, {"n", cg.vertex_count()}, {"q", cg.colour_count()}};
}

ColouredGraph coloured_from_json(const nlohmann::json& j, const Graph* host) {
  require(j.contains("n") && j.contains("q") && j.contains("layers"),
          "json: coloured graph needs 'n', 'q' and 'layers'");
  const int n = j.at("n").get<int>();
  const int q = j.at("q").get<int>();
  const auto& jl = j.at("layers");
  require(jl.is_array() && static_cast<int>(jl.size()) == q + 1,
          "json: expected q+1 layers, layer 0 first");
  std::vector<std::vector<Edge>> layers;
  for (const auto& layer : jl) layers.push_back(edges_from_json(layer));
  if (host != nullptr) {
    require(host->vertex_count() == n, "json: colouring order differs from the host");
    // The ColouredGraph constructor rejects non-host edges.
    return ColouredGraph(*host, std::move(layers));
  }
  std::vector<Edge> union_edges;
  for (const auto& layer : layers) union_edges.insert(union_edges.end(), layer.begin(), layer.end());
  union_edges = [](std::vector<Edge> e) {
    for (auto& x : e) x = make_edge(x.first, x.second);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
  }(std::move(union_edges));
  return ColouredGraph(Graph(n, std::move(union_edges)), std::move(layers));
}

}  // namespace matchram
