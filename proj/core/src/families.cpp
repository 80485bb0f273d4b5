#include "hypersub/families.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "hypersub/error.hpp"

namespace hypersub {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }

std::vector<Edge> pair_set_to_edges(const std::set<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  return edges;
}

}  // namespace

Hypergraph power_of_graph(const Hypergraph& g, std::size_t k) {
  if (g.uniformity() != std::size_t{2})
    throw Error(errc::not_a_graph, "the power construction needs a 2-uniform input");
  if (k < 3) throw Error(errc::k_too_small, "graph power needs k >= 3");

  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t pad = k - 2;

  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<std::string> labels;
  labels.reserve(n + m * pad);
  if (g.labels().empty()) {
    for (std::size_t v = 0; v < n; ++v) labels.push_back("v" + idx(v));
  } else {
    labels = g.labels();
  }

  for (std::size_t ei = 0; ei < m; ++ei) {
    Edge e = g.edge(ei);
    for (std::size_t c = 0; c < pad; ++c) {
      e.push_back(n + ei * pad + c);
      labels.push_back("e" + idx(ei + 1) + "." + idx(c + 1));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n + m * pad, std::move(edges), std::move(labels));
}

Hypergraph hyperflower(std::size_t l, std::size_t s, std::size_t t) {
  return hyperflower_general(l, 1, s, t);
}

Hypergraph hyperflower_general(std::size_t l, std::size_t r, std::size_t s, std::size_t t) {
  if (l < 1 || r < 1 || s < 1 || t < 1)
    throw Error(errc::bad_parameters, "hyperflower needs l, r, s, t >= 1");
  const std::size_t centers = r * s;
  const std::size_t n = centers + l * t;

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < s; ++i)
      labels.push_back(r == 1 ? "w" + idx(i + 1) : "w" + idx(c + 1) + "." + idx(i + 1));
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t i = 0; i < t; ++i) labels.push_back("u" + idx(i + 1) + "." + idx(j + 1));

  std::vector<Edge> edges;
  edges.reserve(l * r);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t c = 0; c < r; ++c) {
      Edge e;
      e.reserve(s + t);
      for (std::size_t i = 0; i < s; ++i) e.push_back(c * s + i);
      for (std::size_t i = 0; i < t; ++i) e.push_back(centers + j * t + i);
      edges.push_back(std::move(e));
    }
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Hypergraph hyperstar(std::size_t l, std::size_t k) {
  if (k < 2) throw Error(errc::bad_parameters, "hyperstar needs k >= 2");
  return hyperflower(l, 1, k - 1);
}

Hypergraph petal_overlapped_hyperflower(std::size_t l, std::size_t s, std::size_t t) {
  if (l < 3)
    throw Error(errc::bad_parameters, "a cycle of petals needs l >= 3");
  if (s < 1 || t < 1)
    throw Error(errc::bad_parameters, "petal-overlapped hyperflower needs s, t >= 1");
  const std::size_t n = s + l + l * t;

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < s; ++i) labels.push_back("w" + idx(i + 1));
  for (std::size_t j = 0; j < l; ++j) labels.push_back("v" + idx(j + 1));
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t i = 0; i < t; ++i) labels.push_back("u" + idx(i + 1) + "." + idx(j + 1));

  std::vector<Edge> edges;
  edges.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    Edge e;
    e.reserve(s + t + 2);
    for (std::size_t i = 0; i < s; ++i) e.push_back(i);
    e.push_back(s + j);
    e.push_back(s + (j + 1) % l);
    for (std::size_t i = 0; i < t; ++i) e.push_back(s + l + j * t + i);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Hypergraph squid(std::size_t k) {
  if (k < 2) throw Error(errc::bad_parameters, "squid needs k >= 2");
  const std::size_t n = k * (k - 1) + 1;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t j = 0; j + 1 < k; ++j)
    for (std::size_t c = 0; c < k; ++c) labels.push_back("i" + idx(j + 1) + "." + idx(c + 1));
  labels.push_back("i" + idx(k));

  std::vector<Edge> edges;
  edges.reserve(k);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    Edge e;
    for (std::size_t c = 0; c < k; ++c) e.push_back(j * k + c);
    edges.push_back(std::move(e));
  }
  Edge center;
  for (std::size_t j = 0; j + 1 < k; ++j) center.push_back(j * k);
  center.push_back(k * (k - 1));
  edges.push_back(std::move(center));
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Hypergraph squid_like(std::size_t k) {
  if (k < 2) throw Error(errc::bad_parameters, "squid-like hypergraph needs k >= 2");
  // First-column vertices w_j = i_{j,1} come first, then the petal remainders.
  const std::size_t n = k * k;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t j = 0; j < k; ++j) labels.push_back("i" + idx(j + 1) + ".1");
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 2; c <= k; ++c) labels.push_back("i" + idx(j + 1) + "." + idx(c));

  std::vector<Edge> edges;
  edges.reserve(k + 1);
  Edge center;
  for (std::size_t j = 0; j < k; ++j) center.push_back(j);
  edges.push_back(std::move(center));
  for (std::size_t j = 0; j < k; ++j) {
    Edge e;
    e.push_back(j);
    for (std::size_t c = 0; c + 1 < k; ++c) e.push_back(k + j * (k - 1) + c);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Hypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(errc::bad_parameters, "cycle graph needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Hypergraph(n, std::move(edges));
}

Hypergraph complete_graph(std::size_t n) { return complete_uniform_hypergraph(n, 2); }

Hypergraph complete_uniform_hypergraph(std::size_t n, std::size_t k) {
  if (k < 2 || k > n)
    throw Error(errc::bad_parameters, "complete uniform hypergraph needs 2 <= k <= n");
  std::vector<Edge> edges;
  Edge cur(k);
  // lexicographic k-subset enumeration
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    edges.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph circulant_graph(std::size_t n, const std::vector<std::size_t>& connection) {
  if (n < 2) throw Error(errc::bad_parameters, "circulant graph needs n >= 2");
  if (connection.empty())
    throw Error(errc::bad_parameters, "circulant connection set is empty");
  std::set<std::size_t> conn(connection.begin(), connection.end());
  for (std::size_t s : conn) {
    if (s == 0 || s >= n)
      throw Error(errc::bad_parameters, "connection offsets must lie in 1..n-1");
    if (!conn.count(n - s))
      throw Error(errc::bad_parameters,
                  "connection set must be symmetric (missing " + idx(n - s) + ")");
  }
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s : conn) {
      VertexId j = (i + s) % n;
      pairs.insert({std::min<VertexId>(i, j), std::max<VertexId>(i, j)});
    }
  return Hypergraph(n, pair_set_to_edges(pairs));
}

Hypergraph petersen_graph() {
  // Kneser graph K(5,2): vertices are the 2-subsets of a 5-set, adjacent when disjoint.
  std::vector<std::pair<int, int>> v;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) v.push_back({a, b});
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const auto& [a, b] = v[i];
      const auto& [c, d] = v[j];
      if (a != c && a != d && b != c && b != d) pairs.insert({i, j});
    }
  return Hypergraph(10, pair_set_to_edges(pairs));
}

Hypergraph shrikhande_graph() {
  std::set<std::pair<VertexId, VertexId>> pairs;
  const int d[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      VertexId u = static_cast<VertexId>(4 * a + b);
      for (const auto& dd : d) {
        VertexId w = static_cast<VertexId>(4 * ((a + dd[0]) % 4) + (b + dd[1]) % 4);
        pairs.insert({std::min(u, w), std::max(u, w)});
      }
    }
  return Hypergraph(16, pair_set_to_edges(pairs));
}

Hypergraph rook_graph_4x4() {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      VertexId u = static_cast<VertexId>(4 * a + b);
      for (int c = 0; c < 4; ++c) {
        if (c != b) {
          VertexId w = static_cast<VertexId>(4 * a + c);
          pairs.insert({std::min(u, w), std::max(u, w)});
        }
        if (c != a) {
          VertexId w = static_cast<VertexId>(4 * c + b);
          pairs.insert({std::min(u, w), std::max(u, w)});
        }
      }
    }
  return Hypergraph(16, pair_set_to_edges(pairs));
}

Hypergraph fano_plane() {
  std::vector<Edge> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                             {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return Hypergraph(7, std::move(lines));
}

namespace {

std::vector<VertexId> range(std::size_t first, std::size_t count) {
  std::vector<VertexId> r(count);
  for (std::size_t i = 0; i < count; ++i) r[i] = first + i;
  return r;
}

}  // namespace

Partition subdivided_hyperflower_partition(std::size_t l, std::size_t s, std::size_t t) {
  return Partition({range(0, s), range(s, l * t), range(s + l * t, l)});
}

Partition subdivided_petal_overlapped_partition(std::size_t l, std::size_t s, std::size_t t) {
  return Partition(
      {range(0, s), range(s, l), range(s + l, l * t), range(s + l + l * t, l)});
}

Partition subdivided_squid_like_partition(std::size_t k) {
  return Partition({range(0, k), range(k, k * (k - 1)), range(k * k, 1), range(k * k + 1, k)});
}

}  // namespace hypersub
