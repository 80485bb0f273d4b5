#include "hypersub/hypergraph.hpp"

#include <algorithm>

#include "hypersub/error.hpp"

namespace hypersub {

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges,
                       std::vector<std::string> labels, bool allow_multi_edges)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)), multi_(allow_multi_edges) {
  if (n_ == 0) throw Error(errc::bad_parameters, "vertex count must be positive");
  if (!labels_.empty() && labels_.size() != n_)
    throw Error(errc::bad_parameters, "label count must equal the vertex count");

  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    Edge& e = edges_[ei];
    if (e.empty())
      throw Error(errc::empty_edge, "edge " + std::to_string(ei) + " is empty");
    for (VertexId v : e)
      if (v >= n_)
        throw Error(errc::vertex_out_of_range,
                    "edge " + std::to_string(ei) + " references vertex " +
                        std::to_string(v) + " but n = " + std::to_string(n_));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw Error(errc::bad_parameters,
                  "edge " + std::to_string(ei) + " repeats a vertex");
    if (e.size() < 2)
      throw Error(errc::singleton_edge,
                  "edge " + std::to_string(ei) + " has cardinality 1");
  }

  if (!multi_) {
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw Error(errc::duplicate_edge,
                  "repeated vertex set (enable multi-edges to allow)");
  }

  degrees_.assign(n_, 0);
  incident_.assign(n_, {});
  for (std::size_t ei = 0; ei < edges_.size(); ++ei)
    for (VertexId v : edges_[ei]) {
      ++degrees_[v];
      incident_[v].push_back(ei);
    }
  for (VertexId v = 0; v < n_; ++v)
    if (degrees_[v] == 0)
      throw Error(errc::dangling_vertex,
                  "vertex " + std::to_string(v) + " has degree 0");
}

std::size_t Hypergraph::degree(VertexId v) const {
  if (v >= n_)
    throw Error(errc::vertex_out_of_range, "vertex " + std::to_string(v));
  return degrees_[v];
}

std::size_t Hypergraph::codegree(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_)
    throw Error(errc::vertex_out_of_range,
                "vertex " + std::to_string(std::max(u, v)));
  if (u == v) throw Error(errc::same_vertex, "codegree needs two distinct vertices");
  std::size_t count = 0;
  for (std::size_t ei : incident_[u]) {
    const Edge& e = edges_[ei];
    if (std::binary_search(e.begin(), e.end(), v)) ++count;
  }
  return count;
}

std::optional<std::size_t> Hypergraph::uniformity() const {
  std::size_t k = edges_.front().size();
  for (const Edge& e : edges_)
    if (e.size() != k) return std::nullopt;
  return k;
}

std::optional<std::size_t> Hypergraph::regularity() const {
  std::size_t r = degrees_.front();
  for (std::size_t d : degrees_)
    if (d != r) return std::nullopt;
  return r;
}

bool Hypergraph::is_linear() const {
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const Edge& a = edges_[i];
      const Edge& b = edges_[j];
      std::size_t shared = 0, x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
          if (++shared > 1) return false;
          ++x, ++y;
        } else if (a[x] < b[y]) {
          ++x;
        } else {
          ++y;
        }
      }
    }
  return true;
}

namespace {

// Integer codegree counts; one pass over all in-edge vertex pairs.
std::vector<long long> codegree_counts(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<long long> c(n * n, 0);
  for (const Edge& e : h.edges())
    for (std::size_t x = 0; x + 1 < e.size(); ++x)
      for (std::size_t y = x + 1; y < e.size(); ++y) {
        ++c[e[x] * n + e[y]];
        ++c[e[y] * n + e[x]];
      }
  return c;
}

}  // namespace

SymMatrix adjacency_matrix(const Hypergraph& h) {
  auto k = h.uniformity();
  if (!k)
    throw Error(errc::not_uniform, "adjacency matrix requires a uniform hypergraph");
  const std::size_t n = h.vertex_count();
  const double denom = static_cast<double>(*k - 1);
  auto counts = codegree_counts(h);
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      a.set(i, j, static_cast<double>(counts[i * n + j]) / denom);
  return a;
}

SymMatrix codegree_matrix(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  auto counts = codegree_counts(h);
  SymMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c.set(i, j, static_cast<double>(counts[i * n + j]));
  return c;
}

Matrix incidence_matrix(const Hypergraph& h) {
  Matrix b(h.vertex_count(), h.edge_count());
  for (std::size_t ei = 0; ei < h.edge_count(); ++ei)
    for (VertexId v : h.edge(ei)) b(v, ei) = 1.0;
  return b;
}

}  // namespace hypersub
