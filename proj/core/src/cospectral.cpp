#include "hypersub/cospectral.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "hypersub/error.hpp"
#include "hypersub/families.hpp"
#include "hypersub/predictors.hpp"
#include "hypersub/spectra.hpp"
#include "hypersub/subdivision.hpp"

namespace hypersub {

CospectralComparison are_cospectral(const Hypergraph& a, const Hypergraph& b,
                                    double tolerance) {
  if (!a.uniformity() || !b.uniformity())
    throw Error(errc::not_uniform, "cospectrality needs uniform hypergraphs");
  const auto sa = eigenvalues(adjacency_matrix(a));
  const auto sb = eigenvalues(adjacency_matrix(b));
  const auto cmp = multiset_equal(sa, sb, tolerance);
  return {cmp.equal, cmp.max_deviation};
}

namespace {

std::vector<int> codegree_ints(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<int> c(n * n, 0);
  for (const Edge& e : h.edges())
    for (std::size_t x = 0; x + 1 < e.size(); ++x)
      for (std::size_t y = x + 1; y < e.size(); ++y) {
        ++c[e[x] * n + e[y]];
        ++c[e[y] * n + e[x]];
      }
  return c;
}

// Joint weighted color refinement on the codegree structure. Colors are
// assigned from one shared dictionary, so equal colors mean equal iterated
// invariants across the two hypergraphs.
struct JointColors {
  std::vector<int> a, b;
  std::size_t classes;
};

JointColors joint_refinement(const Hypergraph& ha, const Hypergraph& hb,
                             const std::vector<int>& ca, const std::vector<int>& cb) {
  const std::size_t n = ha.vertex_count();
  JointColors colors;
  colors.a.resize(n);
  colors.b.resize(n);

  {
    std::map<std::size_t, int> dict;
    for (std::size_t v = 0; v < n; ++v) dict.emplace(ha.degree(v), 0);
    for (std::size_t v = 0; v < n; ++v) dict.emplace(hb.degree(v), 0);
    int next = 0;
    for (auto& [key, id] : dict) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      colors.a[v] = dict[ha.degree(v)];
      colors.b[v] = dict[hb.degree(v)];
    }
    colors.classes = dict.size();
  }

  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  for (std::size_t round = 0; round < n; ++round) {
    std::map<Key, int> dict;
    auto key_of = [&](const std::vector<int>& cg, const std::vector<int>& col,
                      std::size_t v) {
      std::vector<std::pair<int, int>> nb;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && cg[v * n + u] > 0) nb.push_back({cg[v * n + u], col[u]});
      std::sort(nb.begin(), nb.end());
      return Key{col[v], std::move(nb)};
    };
    std::vector<Key> keys_a(n), keys_b(n);
    for (std::size_t v = 0; v < n; ++v) {
      keys_a[v] = key_of(ca, colors.a, v);
      keys_b[v] = key_of(cb, colors.b, v);
      dict.emplace(keys_a[v], 0);
      dict.emplace(keys_b[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : dict) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      colors.a[v] = dict[keys_a[v]];
      colors.b[v] = dict[keys_b[v]];
    }
    if (dict.size() == colors.classes) break;
    colors.classes = dict.size();
  }
  return colors;
}

std::vector<Edge> normalized_edges(const Hypergraph& h) {
  std::vector<Edge> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

IsoResult are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                         std::size_t node_budget) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return {IsoVerdict::non_isomorphic, 0, std::nullopt};
  const std::size_t n = a.vertex_count();

  auto sorted_sizes = [](const Hypergraph& h) {
    std::vector<std::size_t> s;
    for (const Edge& e : h.edges()) s.push_back(e.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  auto sorted_degrees = [n](const Hypergraph& h) {
    std::vector<std::size_t> d(n);
    for (std::size_t v = 0; v < n; ++v) d[v] = h.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (sorted_sizes(a) != sorted_sizes(b) || sorted_degrees(a) != sorted_degrees(b))
    return {IsoVerdict::non_isomorphic, 0, std::nullopt};

  const auto ca = codegree_ints(a);
  const auto cb = codegree_ints(b);
  const auto colors = joint_refinement(a, b, ca, cb);

  std::map<int, std::size_t> hist_a, hist_b;
  for (int c : colors.a) ++hist_a[c];
  for (int c : colors.b) ++hist_b[c];
  if (hist_a != hist_b) return {IsoVerdict::non_isomorphic, 0, std::nullopt};

  std::vector<std::vector<VertexId>> candidates(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (colors.a[v] == colors.b[u]) candidates[v].push_back(u);

  // Static search order: expand along codegree connections so assignment
  // constraints bite early; prefer small candidate sets.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    long best_links = -1;
    std::size_t best_cands = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      long links = 0;
      for (std::size_t u : order)
        if (ca[v * n + u] > 0) ++links;
      if (best == n || links > best_links ||
          (links == best_links && candidates[v].size() < best_cands)) {
        best = v;
        best_links = links;
        best_cands = candidates[v].size();
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  const auto edges_b = normalized_edges(b);
  std::vector<long long> phi(n, -1);
  std::vector<char> used(n, 0);
  std::size_t nodes = 0;
  bool exceeded = false;
  std::optional<std::vector<VertexId>> found;

  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    if (depth == n) {
      std::vector<Edge> mapped;
      mapped.reserve(a.edge_count());
      for (const Edge& e : a.edges()) {
        Edge me;
        me.reserve(e.size());
        for (VertexId v : e) me.push_back(static_cast<VertexId>(phi[v]));
        std::sort(me.begin(), me.end());
        mapped.push_back(std::move(me));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped != edges_b) return false;
      std::vector<VertexId> mapping(n);
      for (std::size_t v = 0; v < n; ++v) mapping[v] = static_cast<VertexId>(phi[v]);
      found = std::move(mapping);
      return true;
    }
    const std::size_t v = order[depth];
    for (VertexId u : candidates[v]) {
      if (used[u]) continue;
      if (++nodes > node_budget) {
        exceeded = true;
        return false;
      }
      bool ok = true;
      for (std::size_t d = 0; d < depth; ++d) {
        const std::size_t w = order[d];
        if (ca[v * n + w] != cb[u * n + static_cast<std::size_t>(phi[w])]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      phi[v] = static_cast<long long>(u);
      used[u] = 1;
      if (dfs(depth + 1)) return true;
      phi[v] = -1;
      used[u] = 0;
      if (exceeded) return false;
    }
    return false;
  };

  if (dfs(0)) return {IsoVerdict::isomorphic, nodes, std::move(found)};
  if (exceeded) return {IsoVerdict::undecided, nodes, std::nullopt};
  return {IsoVerdict::non_isomorphic, nodes, std::nullopt};
}

Hypergraph relabel(const Hypergraph& h, const std::vector<VertexId>& perm) {
  const std::size_t n = h.vertex_count();
  if (perm.size() != n) throw Error(errc::bad_parameters, "permutation length mismatch");
  std::vector<char> seen(n, 0);
  for (VertexId p : perm) {
    if (p >= n || seen[p]) throw Error(errc::bad_parameters, "not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    Edge me;
    me.reserve(e.size());
    for (VertexId v : e) me.push_back(perm[v]);
    edges.push_back(std::move(me));
  }
  std::vector<std::string> labels;
  if (!h.labels().empty()) {
    labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) labels[perm[v]] = h.labels()[v];
  }
  return Hypergraph(n, std::move(edges), std::move(labels), h.multi_edges_allowed());
}

Hypergraph shuffled(const Hypergraph& h, std::uint64_t seed) {
  std::vector<VertexId> perm(h.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(h, perm);
}

namespace {

CospectralCertificate::Lift lift_verdict(IsoVerdict base, const IsoResult& sub) {
  if (sub.verdict == IsoVerdict::non_isomorphic)
    return CospectralCertificate::Lift::verified;
  if (sub.verdict == IsoVerdict::isomorphic) return CospectralCertificate::Lift::isomorphic;
  return base == IsoVerdict::non_isomorphic ? CospectralCertificate::Lift::by_construction
                                            : CospectralCertificate::Lift::undecided;
}

}  // namespace

CospectralCertificate cospectral_pair_t8(const Hypergraph& h1, const Hypergraph& h2,
                                         double tolerance, std::size_t node_budget) {
  const auto k1 = h1.uniformity(), k2 = h2.uniformity();
  if (!k1 || !k2) throw Error(errc::not_uniform, "t8 needs uniform inputs");
  const auto r1 = h1.regularity(), r2 = h2.regularity();
  if (!r1 || !r2) throw Error(errc::not_regular, "t8 needs regular inputs");
  if (*k1 != *k2 || *r1 != *r2 || h1.vertex_count() != h2.vertex_count())
    throw Error(errc::not_cospectral_input,
                "inputs differ in uniformity, regularity or order");
  const auto base = are_cospectral(h1, h2, tolerance);
  if (!base.cospectral)
    throw Error(errc::not_cospectral_input,
                "input spectra deviate by " + std::to_string(base.deviation));
  const auto base_iso = are_isomorphic(h1, h2, node_budget);
  if (base_iso.verdict == IsoVerdict::isomorphic)
    throw Error(errc::inputs_isomorphic, "the base pair is isomorphic");

  auto s1 = subdivide(h1).hypergraph;
  auto s2 = subdivide(h2).hypergraph;
  const auto sub = are_cospectral(s1, s2, tolerance);
  if (!sub.cospectral)
    throw Error(errc::certification_failed,
                "subdivided spectra deviate by " + std::to_string(sub.deviation));
  const auto sub_iso = are_isomorphic(s1, s2, node_budget);

  CospectralCertificate cert{
      "t8",
      h1,
      h2,
      std::move(s1),
      std::move(s2),
      {},
      sub.deviation,
      base.deviation,
      tolerance,
      base_iso.verdict,
      base_iso.nodes_explored,
      lift_verdict(base_iso.verdict, sub_iso),
      sub_iso.nodes_explored,
      std::nullopt};
  cert.shared_spectrum = eigenvalues(adjacency_matrix(cert.first)).values();
  return cert;
}

CospectralCertificate cospectral_pair_t7(const Hypergraph& g1, const Hypergraph& g2,
                                         std::size_t k, double tolerance,
                                         std::size_t node_budget) {
  if (g1.uniformity() != std::size_t{2} || g2.uniformity() != std::size_t{2})
    throw Error(errc::not_a_graph, "t7 needs 2-uniform inputs");
  const auto r1 = g1.regularity(), r2 = g2.regularity();
  if (!r1 || !r2) throw Error(errc::not_regular, "t7 needs regular graphs");
  if (*r1 != *r2 || g1.vertex_count() != g2.vertex_count())
    throw Error(errc::not_cospectral_input, "inputs differ in regularity or order");
  if (k < 3) throw Error(errc::k_too_small, "t7 needs k >= 3");
  const auto base = are_cospectral(g1, g2, tolerance);
  if (!base.cospectral)
    throw Error(errc::not_cospectral_input,
                "input spectra deviate by " + std::to_string(base.deviation));
  const auto base_iso = are_isomorphic(g1, g2, node_budget);
  if (base_iso.verdict == IsoVerdict::isomorphic)
    throw Error(errc::inputs_isomorphic, "the base pair is isomorphic");

  auto s1 = subdivide(power_of_graph(g1, k)).hypergraph;
  auto s2 = subdivide(power_of_graph(g2, k)).hypergraph;
  const auto sub = are_cospectral(s1, s2, tolerance);
  if (!sub.cospectral)
    throw Error(errc::certification_failed,
                "subdivided spectra deviate by " + std::to_string(sub.deviation));

  // The formula prediction depends only on shared invariants, so the two
  // predictions must coincide; any gap signals a defect, not a math fact.
  const auto p1 = predict_t2(g1, k).flatten();
  const auto p2 = predict_t2(g2, k).flatten();
  const auto pred = multiset_equal(p1, p2, 1e-9);
  if (!pred.equal)
    throw Error(errc::certification_failed,
                "formula predictions for the pair deviate by " +
                    std::to_string(pred.max_deviation));

  const auto sub_iso = are_isomorphic(s1, s2, node_budget);
  CospectralCertificate cert{
      "t7",
      g1,
      g2,
      std::move(s1),
      std::move(s2),
      {},
      sub.deviation,
      base.deviation,
      tolerance,
      base_iso.verdict,
      base_iso.nodes_explored,
      lift_verdict(base_iso.verdict, sub_iso),
      sub_iso.nodes_explored,
      pred.max_deviation};
  cert.shared_spectrum = eigenvalues(adjacency_matrix(cert.first)).values();
  return cert;
}

}  // namespace hypersub
