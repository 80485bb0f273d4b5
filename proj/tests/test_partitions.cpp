#include <doctest.h>

#include <cmath>

#include "hypersub/error.hpp"
#include "hypersub/families.hpp"
#include "hypersub/partitions.hpp"
#include "hypersub/subdivision.hpp"
#include "testutil.hpp"

using namespace hypersub;

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({{0, 1}, {}}), Error);
  CHECK_THROWS_AS(Partition({{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Partition({{0, 0}}), Error);
  const Partition p({{2, 0}, {1}});
  CHECK(p.cells()[0] == std::vector<VertexId>{0, 2});
  CHECK_THROWS_AS(p.require_covering(4), Error);
  CHECK_NOTHROW(p.require_covering(3));
}

TEST_CASE("singleton partition reproduces the matrix itself") {
  const auto a = adjacency_matrix(subdivide(Hypergraph(3, {{0, 1, 2}})).hypergraph);
  const auto q = check_equitable(a, Partition::singletons(a.order()), 1e-12);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) CHECK(q(i, j) == a(i, j));
  CHECK(containment_check(q, a, 1e-8));
}

TEST_CASE("hyperflower proof partition yields the predicted quotient") {
  const std::size_t l = 4, s = 2, t = 3, k = s + t;
  const double c = static_cast<double>(k - 2) / static_cast<double>(k - 1);
  const auto a = adjacency_matrix(subdivide(hyperflower(l, s, t)).hypergraph);
  const auto q = check_equitable(a, subdivided_hyperflower_partition(l, s, t), 1e-10);

  const double expected[3][3] = {
      {static_cast<double>(l * (s - 1)) * c, static_cast<double>(l * t) * c,
       static_cast<double>(l)},
      {static_cast<double>(s) * c, static_cast<double>(t - 1) * c, 1.0},
      {static_cast<double>(s), static_cast<double>(t), 0.0}};
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t r = 0; r < 3; ++r)
      CHECK(std::abs(q(p, r) - expected[p][r]) <= 1e-12);
  CHECK(containment_check(q, a, 1e-8));
}

TEST_CASE("squid-like proof partition yields the predicted quotient") {
  const std::size_t k = 3;
  const double c = 0.5;
  const auto a = adjacency_matrix(subdivide(squid_like(k)).hypergraph);
  const auto q = check_equitable(a, subdivided_squid_like_partition(k), 1e-10);

  const double expected[4][4] = {{1.0, 1.0, 1.0, 1.0},
                                 {c, c, 0.0, 1.0},
                                 {3.0, 0.0, 0.0, 0.0},
                                 {1.0, 2.0, 0.0, 0.0}};
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t r = 0; r < 4; ++r)
      CHECK(std::abs(q(p, r) - expected[p][r]) <= 1e-12);
  CHECK(containment_check(q, a, 1e-8));
}

TEST_CASE("petal-overlapped proof partition is equitable with containment") {
  for (std::size_t l : {3, 5})
    for (std::size_t t : {1, 2}) {
      const auto a =
          adjacency_matrix(subdivide(petal_overlapped_hyperflower(l, 2, t)).hypergraph);
      const auto q = check_equitable(a, subdivided_petal_overlapped_partition(l, 2, t), 1e-10);
      CHECK(q.order() == 4);
      CHECK(containment_check(q, a, 1e-8));
    }
}

TEST_CASE("non-equitable partitions carry a witness") {
  const auto a = adjacency_matrix(subdivide(Hypergraph(3, {{0, 1, 2}})).hypergraph);
  try {
    (void)check_equitable(a, Partition({{0, 1}, {2, 3}}), 1e-10);
    FAIL("expected NotEquitableError");
  } catch (const NotEquitableError& e) {
    CHECK(e.cell_p() == 1);
    CHECK(e.cell_q() == 0);
    CHECK((e.witness() == 2 || e.witness() == 3));
    CHECK(e.deviation() == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("containment reports the matched margin") {
  const auto a = adjacency_matrix(subdivide(squid_like(3)).hypergraph);
  const auto q = check_equitable(a, subdivided_squid_like_partition(3), 1e-10);
  const auto report = containment_report(q, a, 1e-8);
  CHECK(report.contained);
  CHECK(report.max_match_deviation <= 1e-10);
}

TEST_CASE("perturbing a quotient entry breaks containment") {
  const auto a = adjacency_matrix(subdivide(hyperflower(4, 2, 3)).hypergraph);
  const auto q = check_equitable(a, subdivided_hyperflower_partition(4, 2, 3), 1e-10);
  Matrix entries = q.entries();
  entries(0, 1) += 0.1;
  entries(1, 0) += 0.1 * 2.0 / 12.0;  // keep the cell-size balance intact
  const QuotientMatrix perturbed(entries, q.source_partition());
  CHECK_FALSE(containment_check(perturbed, a, 1e-8));
}

TEST_CASE("refinement splits the subdivided triple by row sums") {
  const auto a = adjacency_matrix(subdivide(Hypergraph(3, {{0, 1, 2}})).hypergraph);
  const auto refined = refine_to_equitable(a, Partition::single_cell(4));
  REQUIRE(refined.cell_count() == 2);
  CHECK(refined.cells()[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(refined.cells()[1] == std::vector<VertexId>{3});
  CHECK_NOTHROW((void)check_equitable(a, refined, 1e-10));
}

TEST_CASE("refining an equitable partition returns it unchanged") {
  const auto a = adjacency_matrix(complete_graph(5));
  const auto seed = Partition::single_cell(5);
  CHECK(refine_to_equitable(a, seed) == seed);
}

TEST_CASE("refinement lands inside the proof cells on the hyperflower") {
  const auto a = adjacency_matrix(subdivide(hyperflower(4, 2, 3)).hypergraph);
  const auto refined = refine_to_equitable(a, Partition::single_cell(a.order()));
  CHECK_NOTHROW((void)check_equitable(a, refined, 1e-8));
  const auto proof = subdivided_hyperflower_partition(4, 2, 3);
  for (const auto& cell : refined.cells()) {
    bool inside_some = false;
    for (const auto& proof_cell : proof.cells()) {
      bool inside = true;
      for (VertexId v : cell)
        if (!std::binary_search(proof_cell.begin(), proof_cell.end(), v)) inside = false;
      if (inside) inside_some = true;
    }
    CHECK(inside_some);
  }
}
