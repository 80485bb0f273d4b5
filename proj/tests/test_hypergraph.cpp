#include <doctest.h>

#include "hypersub/error.hpp"
#include "hypersub/families.hpp"
#include "hypersub/hypergraph.hpp"
#include "testutil.hpp"

using namespace hypersub;

namespace {

bool throws_code(errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("construction validates the model invariants") {
  CHECK_NOTHROW(Hypergraph(3, {{0, 1, 2}}));
  CHECK(throws_code(errc::empty_edge, [] { Hypergraph(3, {{0, 1, 2}, {}}); }));
  CHECK(throws_code(errc::singleton_edge, [] { Hypergraph(2, {{0, 1}, {1}}); }));
  CHECK(throws_code(errc::dangling_vertex, [] { Hypergraph(3, {{0, 1}}); }));
  CHECK(throws_code(errc::vertex_out_of_range, [] { Hypergraph(3, {{0, 1, 3}}); }));
  CHECK(throws_code(errc::duplicate_edge, [] { Hypergraph(3, {{0, 1, 2}, {2, 1, 0}}); }));
  CHECK_NOTHROW(Hypergraph(3, {{0, 1, 2}, {2, 1, 0}}, {}, /*allow_multi_edges=*/true));
  CHECK(throws_code(errc::bad_parameters, [] { Hypergraph(3, {{0, 1, 1}}); }));
  CHECK(throws_code(errc::bad_parameters, [] { Hypergraph(2, {{0, 1}}, {"a"}); }));

  // edges are normalized to sorted ascending
  Hypergraph h(4, {{2, 0, 1}, {3, 0, 1}});
  CHECK(h.edge(0) == Edge{0, 1, 2});
  CHECK(h.edge(1) == Edge{0, 1, 3});
}

TEST_CASE("degree and codegree") {
  Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(h.degree(0) == 2);
  CHECK(h.degree(3) == 1);
  CHECK(h.codegree(0, 1) == 2);
  CHECK(h.codegree(0, 2) == 1);
  CHECK(h.codegree(2, 3) == 0);
  CHECK(throws_code(errc::vertex_out_of_range, [&] { (void)h.degree(4); }));
  CHECK(throws_code(errc::same_vertex, [&] { (void)h.codegree(1, 1); }));

  Hypergraph triple(3, {{0, 1, 2}});
  CHECK(triple.degree(2) == 1);
  CHECK(triple.codegree(0, 1) == 1);

  // every point of the 7-point plane lies on 3 lines, every pair on exactly one
  Hypergraph f = fano_plane();
  for (VertexId v = 0; v < 7; ++v) CHECK(f.degree(v) == 3);
  for (VertexId u = 0; u < 7; ++u)
    for (VertexId v = u + 1; v < 7; ++v) CHECK(f.codegree(u, v) == 1);
}

TEST_CASE("uniformity, regularity, linearity") {
  Hypergraph triple(3, {{0, 1, 2}});
  CHECK(triple.uniformity() == std::size_t{3});
  CHECK(triple.regularity() == std::size_t{1});
  CHECK(triple.is_linear());

  // subdivided triple: one new vertex p = 3, three edges through it
  Hypergraph sub(4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(sub.uniformity() == std::size_t{3});
  CHECK_FALSE(sub.regularity().has_value());
  CHECK_FALSE(sub.is_linear());

  Hypergraph f = fano_plane();
  CHECK(f.uniformity() == std::size_t{3});
  CHECK(f.regularity() == std::size_t{3});
  CHECK(f.is_linear());

  Hypergraph mixed(4, {{0, 1}, {1, 2, 3}});
  CHECK_FALSE(mixed.uniformity().has_value());
}

TEST_CASE("adjacency matrix entries") {
  Hypergraph triple(3, {{0, 1, 2}});
  const auto a = adjacency_matrix(triple);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(a(i, j) == (i == j ? 0.0 : 0.5));

  // a plain graph gets its ordinary 0/1 adjacency matrix
  const auto c4 = adjacency_matrix(cycle_graph(4));
  CHECK(c4(0, 1) == 1.0);
  CHECK(c4(0, 2) == 0.0);
  CHECK(c4(3, 0) == 1.0);

  Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}});
  const auto ah = adjacency_matrix(h);
  CHECK(ah(0, 1) == 1.0);
  CHECK(ah(0, 2) == 0.5);
  CHECK(ah(2, 3) == 0.0);

  Hypergraph mixed(4, {{0, 1}, {1, 2, 3}});
  CHECK_THROWS_AS((void)adjacency_matrix(mixed), Error);
}

TEST_CASE("codegree matrix entries") {
  Hypergraph triple(3, {{0, 1, 2}});
  const auto c = codegree_matrix(triple);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c(i, j) == (i == j ? 0.0 : 1.0));

  const auto cf = codegree_matrix(fano_plane());  // J - I by linearity
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(cf(i, j) == (i == j ? 0.0 : 1.0));

  Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(codegree_matrix(h)(0, 1) == 2.0);
}

TEST_CASE("incidence matrix and the gram identity") {
  Hypergraph triple(3, {{0, 1, 2}});
  const auto b = incidence_matrix(triple);
  CHECK(b.rows() == 3);
  CHECK(b.cols() == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(b(i, 0) == 1.0);

  // B B^T = r I + codegree matrix on regular instances
  for (const Hypergraph& h : {fano_plane(), cycle_graph(4)}) {
    const auto g = gram(incidence_matrix(h));
    const auto c = codegree_matrix(h);
    const double r = static_cast<double>(*h.regularity());
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
      for (std::size_t j = 0; j < h.vertex_count(); ++j)
        CHECK(g(i, j) == (i == j ? r : c(i, j)));
  }
}

TEST_CASE("properties on random instances") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 60; ++iter) {
    const Hypergraph h = testutil::random_hypergraph(rng);

    // gram(B) carries the degrees on the diagonal and codegrees elsewhere
    const auto g = gram(incidence_matrix(h));
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
      for (std::size_t j = 0; j < h.vertex_count(); ++j)
        CHECK(g(i, j) ==
              (i == j ? static_cast<double>(h.degree(i))
                      : static_cast<double>(h.codegree(i, j))));

    // adjacency = codegree / (k-1), entrywise bit-exact (same integer counts,
    // same single division), symmetric with a zero diagonal
    if (auto k = h.uniformity()) {
      const auto a = adjacency_matrix(h);
      const auto c = codegree_matrix(h);
      const double denom = static_cast<double>(*k - 1);
      bool exact = true;
      for (std::size_t i = 0; i < h.vertex_count(); ++i)
        for (std::size_t j = 0; j < h.vertex_count(); ++j) {
          if (a(i, j) != c(i, j) / denom) exact = false;
          if (a(i, j) != a(j, i)) exact = false;
          if (i == j && a(i, j) != 0.0) exact = false;
        }
      CHECK(exact);
    }
  }
}
