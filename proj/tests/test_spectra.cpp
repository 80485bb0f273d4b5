#include <doctest.h>

#include <cmath>
#include <random>

#include "hypersub/error.hpp"
#include "hypersub/families.hpp"
#include "hypersub/spectra.hpp"
#include "hypersub/subdivision.hpp"
#include "testutil.hpp"

using namespace hypersub;
using testutil::checked_eigenvalues;

TEST_CASE("eigenvalues of small matrices") {
  SymMatrix swap2(2);
  swap2.set(0, 1, 1.0);
  const auto s = checked_eigenvalues(swap2);
  CHECK(s.values()[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.values()[1] == doctest::Approx(-1.0).epsilon(1e-12));

  // subdivided triple, 4x4: {(1 +- sqrt(13))/2, -1/2 x2}
  const auto sub = subdivide(Hypergraph(3, {{0, 1, 2}}));
  const auto vals = checked_eigenvalues(adjacency_matrix(sub.hypergraph)).values();
  const double root = std::sqrt(13.0);
  const std::vector<double> expected = {(1.0 + root) / 2.0, -0.5, -0.5, (1.0 - root) / 2.0};
  CHECK(testutil::max_list_dev(vals, expected) <= 1e-12);
}

TEST_CASE("strongly regular spectrum of the 16-vertex pair") {
  // srg(16, 6, 2, 2): eigenvalues 6, 2 (x6), -2 (x9)
  for (const Hypergraph& g : {shrikhande_graph(), rook_graph_4x4()}) {
    const auto s = checked_eigenvalues(adjacency_matrix(g));
    std::vector<double> expected = {6.0};
    expected.insert(expected.end(), 6, 2.0);
    expected.insert(expected.end(), 9, -2.0);
    CHECK(testutil::max_list_dev(s.values(), expected) <= 1e-9);
  }
}

TEST_CASE("grouped view") {
  SpectrumMultiset s({1.0, 1.0 + 1e-12, 0.5, -0.25, -0.25, -0.25}, 1e-8);
  const auto groups = s.grouped();
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].multiplicity == 2);
  CHECK(groups[1].multiplicity == 1);
  CHECK(groups[2].multiplicity == 3);
  std::size_t total = 0;
  for (const auto& g : groups) total += g.multiplicity;
  CHECK(total == s.size());
}

TEST_CASE("real root extraction") {
  const auto pm1 = real_roots(Polynomial({1.0, 0.0, -1.0}));
  REQUIRE(pm1.size() == 2);
  CHECK(pm1[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pm1[1] == doctest::Approx(-1.0).epsilon(1e-12));

  // triple root: multiplicity is preserved
  const auto zeros = real_roots(Polynomial({1.0, 0.0, 0.0, 0.0}));
  REQUIRE(zeros.size() == 3);
  for (double z : zeros) CHECK(std::abs(z) <= 1e-9);

  // the quadratic clause at k=3, r=1, codegree eigenvalue 2 equals the
  // subdivided-triple extremes
  const auto roots = real_roots(Polynomial({2.0, -1.0 * 2.0 / 2.0 * 2.0, -2.0 - 2.0 * 2.0}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx((1.0 + std::sqrt(13.0)) / 2.0).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx((1.0 - std::sqrt(13.0)) / 2.0).epsilon(1e-12));

  CHECK_THROWS_AS((void)real_roots(Polynomial({1.0, 0.0, 1.0})), Error);  // x^2 + 1
  CHECK_THROWS_AS(Polynomial({0.0, 1.0}), Error);                         // zero lead
}

TEST_CASE("root residual property on generated polynomials") {
  std::mt19937_64 rng(10101);
  std::uniform_real_distribution<double> rd(-5.0, 5.0);
  for (int iter = 0; iter < 50; ++iter) {
    // sample real roots first, expand, then recover them
    const std::size_t degree = 2 + static_cast<std::size_t>(iter % 3);
    std::vector<double> roots;
    for (std::size_t i = 0; i < degree; ++i) roots.push_back(rd(rng));
    std::vector<double> coeffs = {1.0};
    for (double r : roots) {
      std::vector<double> next(coeffs.size() + 1, 0.0);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i] += coeffs[i];
        next[i + 1] -= coeffs[i] * r;
      }
      coeffs = std::move(next);
    }
    const Polynomial p(coeffs);
    const auto found = real_roots(p);
    double norm = 0.0;
    for (double c : coeffs) norm += std::abs(c);
    for (double r : found) CHECK(std::abs(p(r)) <= 1e-6 * (1.0 + norm));
    CHECK(testutil::max_list_dev(found, testutil::sorted_desc(roots)) <= 1e-5);
  }
}

TEST_CASE("balanced eigensolve matches the plain one on symmetric input") {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = 2.0;
  m(1, 0) = 1.0;
  m(1, 1) = 0.0;
  // weights (1, 2): diag(w) m is symmetric
  const auto vals = balanced_eigenvalues(m, {1.0, 2.0});
  // det = -2, trace = 1 -> roots of x^2 - x - 2 = {2, -1}
  CHECK(vals[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(vals[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)balanced_eigenvalues(m, {1.0, 7.0}), Error);
}

TEST_CASE("multiset comparison") {
  const auto cmp = multiset_equal(SpectrumMultiset({1.0, 0.0}),
                                  SpectrumMultiset({1.0, 1e-12}), 1e-8);
  CHECK(cmp.equal);
  CHECK(cmp.max_deviation <= 1e-12);

  const auto mismatch =
      multiset_equal(SpectrumMultiset({1.0, 0.0}), SpectrumMultiset({1.0}), 1.0);
  CHECK_FALSE(mismatch.equal);
  CHECK(std::isinf(mismatch.max_deviation));

  const auto shrik = eigenvalues(adjacency_matrix(shrikhande_graph()));
  const auto rook = eigenvalues(adjacency_matrix(rook_graph_4x4()));
  const auto pair = multiset_equal(shrik, rook, 1e-8);
  CHECK(pair.equal);
  CHECK(pair.max_deviation <= 1e-9);
}
