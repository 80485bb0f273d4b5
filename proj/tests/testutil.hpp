#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "hypersub/hypergraph.hpp"
#include "hypersub/spectra.hpp"

namespace testutil {

using namespace hypersub;

// Solver call wrapped in the two invariants every solve must satisfy:
// sum of eigenvalues = trace and sum of squares = squared Frobenius norm.
inline SpectrumMultiset checked_eigenvalues(const SymMatrix& m) {
  auto s = eigenvalues(m);
  double sum = 0.0, sumsq = 0.0;
  for (double v : s.values()) {
    sum += v;
    sumsq += v * v;
  }
  const double order = static_cast<double>(m.order());
  const double scale = std::max(1.0, m.frobenius_norm());
  REQUIRE(std::abs(sum - m.trace()) <= 1e-9 * order * scale);
  REQUIRE(std::abs(sumsq - m.frobenius_norm() * m.frobenius_norm()) <= 1e-8 * order * scale * scale);
  return s;
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline double max_list_dev(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Random hypergraph with every vertex covered; mixed edge sizes unless k is fixed.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_n = 8,
                                    std::size_t fixed_k = 0) {
  // fixed_k == 0 means mixed edge sizes

  std::uniform_int_distribution<std::size_t> nd(3, max_n);
  const std::size_t n = nd(rng);
  if (fixed_k > n) fixed_k = n;
  std::uniform_int_distribution<std::size_t> md(2, 6);
  const std::size_t m_target = md(rng);

  std::set<Edge> chosen;
  auto random_edge = [&](std::size_t size) {
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    Edge e(ids.begin(), ids.begin() + static_cast<long>(size));
    std::sort(e.begin(), e.end());
    return e;
  };
  std::uniform_int_distribution<std::size_t> kd(2, std::min<std::size_t>(4, n));
  for (std::size_t tries = 0; tries < 100 && chosen.size() < m_target; ++tries)
    chosen.insert(random_edge(fixed_k != 0 ? fixed_k : kd(rng)));

  // cover any vertex the random edges missed
  std::vector<char> covered(n, 0);
  for (const Edge& e : chosen)
    for (VertexId v : e) covered[v] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (covered[v]) continue;
    const std::size_t size = fixed_k != 0 ? fixed_k : 2;
    Edge e = {v};
    for (std::size_t u = 0; e.size() < size; ++u)
      if (u != v) e.push_back(u);
    std::sort(e.begin(), e.end());
    chosen.insert(e);
    for (VertexId u : e) covered[u] = 1;
  }
  return Hypergraph(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

}  // namespace testutil
