#include "hypersub/subdivision.hpp"

#include <string>

namespace hypersub {

SubdivisionResult subdivide(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();

  std::size_t total = 0;
  for (const Edge& e : h.edges()) total += e.size();

  std::vector<Edge> edges;
  edges.reserve(total);
  std::vector<VertexId> new_vertex(m);
  std::vector<std::size_t> origin;
  origin.reserve(total);

  for (std::size_t ei = 0; ei < m; ++ei) {
    const Edge& e = h.edge(ei);
    const VertexId p = n + ei;
    new_vertex[ei] = p;
    for (std::size_t omit = 0; omit < e.size(); ++omit) {
      Edge ne;
      ne.reserve(e.size());
      for (std::size_t x = 0; x < e.size(); ++x)
        if (x != omit) ne.push_back(e[x]);
      ne.push_back(p);  // p exceeds every original id, so the edge stays sorted
      edges.push_back(std::move(ne));
      origin.push_back(ei);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n + m);
  if (h.labels().empty()) {
    for (std::size_t v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  } else {
    labels = h.labels();
  }
  for (std::size_t ei = 0; ei < m; ++ei) labels.push_back("p_" + std::to_string(ei + 1));

  return SubdivisionResult{
      Hypergraph(n + m, std::move(edges), std::move(labels), h.multi_edges_allowed()),
      std::move(new_vertex), std::move(origin)};
}

}  // namespace hypersub
