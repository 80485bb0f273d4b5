// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the exit
// code is the number of failed criteria. Tolerances are pinned here, in code.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypersub/cospectral.hpp"
#include "hypersub/error.hpp"
#include "hypersub/families.hpp"
#include "hypersub/io.hpp"
#include "hypersub/partitions.hpp"
#include "hypersub/predictors.hpp"
#include "hypersub/spectra.hpp"
#include "hypersub/subdivision.hpp"

namespace {

using namespace hypersub;
namespace fs = std::filesystem;

struct Criterion {
  std::string name;
  std::function<std::string()> run;  // empty string = pass, otherwise failure detail
};

// ---- shared grids -----------------------------------------------------------

Hypergraph single_edge(std::size_t k) {
  Edge e(k);
  for (std::size_t i = 0; i < k; ++i) e[i] = i;
  return Hypergraph(k, {e});
}

std::vector<std::pair<std::string, Hypergraph>> t1_grid() {
  std::vector<std::pair<std::string, Hypergraph>> grid;
  for (std::size_t k = 2; k <= 6; ++k)
    grid.push_back({"single-edge k=" + std::to_string(k), single_edge(k)});
  grid.push_back({"fano", fano_plane()});
  grid.push_back({"complete-3-uniform n=4", complete_uniform_hypergraph(4, 3)});
  for (std::size_t n = 4; n <= 8; ++n)
    grid.push_back({"cycle C" + std::to_string(n), cycle_graph(n)});
  return grid;
}

std::vector<std::pair<std::string, Hypergraph>> t2_bases() {
  std::vector<std::pair<std::string, Hypergraph>> bases;
  for (std::size_t n = 3; n <= 6; ++n)
    bases.push_back({"C" + std::to_string(n), cycle_graph(n)});
  bases.push_back({"petersen", petersen_graph()});
  bases.push_back({"K5", complete_graph(5)});
  return bases;
}

struct Lst {
  std::size_t l, s, t;
};

std::vector<Lst> t3_grid() {
  std::vector<Lst> grid;
  for (std::size_t l = 1; l <= 6; ++l)
    for (std::size_t s = 1; s <= 3; ++s)
      for (std::size_t t = 1; t <= 4; ++t) grid.push_back({l, s, t});
  return grid;
}

std::vector<Lst> t5_grid() {
  std::vector<Lst> grid;
  for (std::size_t l = 3; l <= 6; ++l)
    for (std::size_t s = 1; s <= 2; ++s)
      for (std::size_t t = 1; t <= 3; ++t) grid.push_back({l, s, t});
  return grid;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double prediction_vs_oracle(const PredictedSpectrum& p, const Hypergraph& base) {
  const auto oracle = eigenvalues(adjacency_matrix(subdivide(base).hypergraph));
  return multiset_equal(p.flatten(), oracle, 1e-6).max_deviation;
}

// ---- criterion 1 ------------------------------------------------------------

std::string criterion_counting() {
  std::vector<std::pair<Hypergraph, PredictedSpectrum>> cases;
  for (const auto& [name, h] : t1_grid()) cases.push_back({h, predict_t1(h)});
  for (const auto& [name, g] : t2_bases())
    for (std::size_t k = 3; k <= 5; ++k)
      cases.push_back({power_of_graph(g, k), predict_t2(g, k)});
  for (const auto& [l, s, t] : t3_grid()) cases.push_back({hyperflower(l, s, t), predict_t3(l, s, t)});
  for (std::size_t l = 1; l <= 6; ++l)
    for (std::size_t k = 2; k <= 5; ++k)
      cases.push_back({hyperstar(l, k), predict_t4(l, k)});
  for (const auto& [l, s, t] : t5_grid())
    cases.push_back({petal_overlapped_hyperflower(l, s, t), predict_t5(l, s, t)});
  for (std::size_t k = 2; k <= 6; ++k) cases.push_back({squid_like(k), predict_t6(k)});

  for (const auto& [h, prediction] : cases) {
    const auto s = subdivide(h);
    const std::size_t n = h.vertex_count(), m = h.edge_count();
    if (s.hypergraph.vertex_count() != n + m)
      return "vertex count of a subdivision is not n+m";
    std::size_t total = 0;
    for (const Edge& e : h.edges()) total += e.size();
    if (s.hypergraph.edge_count() != total || total != m * *h.uniformity())
      return "edge count of a subdivision is not m*k";
    if (prediction.value_count() != n + m)
      return "predicted cardinality mismatch at n+m=" + std::to_string(n + m);
  }
  return {};
}

// ---- criteria 2..5 ----------------------------------------------------------

std::string criterion_t1() {
  bool cancellation_seen = false;
  for (const auto& [name, h] : t1_grid()) {
    if (h.edge_count() < h.vertex_count()) cancellation_seen = true;
    const double dev = prediction_vs_oracle(predict_t1(h), h);
    if (dev > 1e-6) return name + " deviates by " + fmt(dev);
  }
  if (!cancellation_seen) return "grid has no m<n cancellation case";
  return {};
}

std::string criterion_t2() {
  for (const auto& [name, g] : t2_bases())
    for (std::size_t k = 3; k <= 5; ++k) {
      const double dev = prediction_vs_oracle(predict_t2(g, k), power_of_graph(g, k));
      if (dev > 1e-6)
        return name + " k=" + std::to_string(k) + " deviates by " + fmt(dev);
    }
  return {};
}

std::string criterion_t3_t4() {
  for (const auto& [l, s, t] : t3_grid()) {
    const auto flower = hyperflower(l, s, t);
    const auto structural = predict_t3(l, s, t);
    const double dev = prediction_vs_oracle(structural, flower);
    if (dev > 1e-6)
      return "t3 l=" + std::to_string(l) + ",s=" + std::to_string(s) +
             ",t=" + std::to_string(t) + " deviates by " + fmt(dev);

    // clause-(i)/(ii) eigenvalues carry exactly the stated multiplicities;
    // the count is collision-aware (other clauses may hit the same value)
    const std::size_t k = s + t;
    const double ci = -static_cast<double>(k - 2) / static_cast<double>(k - 1);
    const double cii = static_cast<double>(l) * ci;
    const auto oracle = eigenvalues(adjacency_matrix(subdivide(flower).hypergraph));
    const auto flat = structural.flatten();
    for (const auto& [value, stated] :
         {std::pair<double, std::size_t>{ci, l * (t - 1)},
          std::pair<double, std::size_t>{cii, s - 1}}) {
      std::size_t in_oracle = 0, in_prediction = 0;
      for (double v : oracle.values())
        if (std::abs(v - value) <= 1e-7) ++in_oracle;
      for (double v : flat.values())
        if (std::abs(v - value) <= 1e-7) ++in_prediction;
      if (in_oracle != in_prediction || in_prediction < stated)
        return "clause multiplicity window mismatch at l=" + std::to_string(l) +
               ",s=" + std::to_string(s) + ",t=" + std::to_string(t);
    }
  }

  // t4 is the s=1, t=k-1 specialization of t3, exactly on integer coefficients
  for (long long l = 1; l <= 6; ++l)
    for (long long k = 2; k <= 5; ++k) {
      const auto c3 = t3_clause_iv_coefficients(l, 1, k - 1);
      const auto c4 = t4_clause_iii_coefficients(l, k);
      for (int i = 0; i < 4; ++i)
        if (c3[i] != (k - 1) * c4[i])
          return "t4 cubic is not the specialized t3 cubic at l=" + std::to_string(l) +
                 ",k=" + std::to_string(k);
      const long long t = k - 1;
      if ((t - 1) * (t - 1) * (k - 2) * (k - 2) != (k - 2) * (k - 2) * (k - 2) * (k - 2) ||
          4 * t * (k - 1) * (k - 1) != 4 * (k - 1) * (k - 1) * (k - 1))
        return "t4 radical discriminant differs from the specialized t3 one";
      const double dev = prediction_vs_oracle(
          predict_t4(static_cast<std::size_t>(l), static_cast<std::size_t>(k)),
          hyperstar(static_cast<std::size_t>(l), static_cast<std::size_t>(k)));
      if (dev > 1e-6)
        return "t4 l=" + std::to_string(l) + ",k=" + std::to_string(k) + " deviates by " +
               fmt(dev);
    }
  return {};
}

std::string criterion_t5_t6() {
  for (const auto& [l, s, t] : t5_grid()) {
    const auto audit = audit_t5(l, s, t, 1e-6);
    if (audit.structural_vs_oracle > 1e-6)
      return "t5 structural " + audit.params + " deviates by " +
             fmt(audit.structural_vs_oracle);
    if (!audit.pass)
      for (const auto& r : audit.reports)
        if (r.offending_clause.empty()) return "t5 " + audit.params + " report without a clause";
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto audit = audit_t6(k, 1e-6);
    if (audit.structural_vs_oracle > 1e-6)
      return "t6 structural k=" + std::to_string(k) + " deviates by " +
             fmt(audit.structural_vs_oracle);
    // the closed-form flavor is expected to be flagged, and the report must
    // name the offending clause
    if (audit.pass) return "t6 closed form unexpectedly passes at k=" + std::to_string(k);
    for (const auto& r : audit.reports)
      if (r.offending_clause != "ii")
        return "t6 k=" + std::to_string(k) + " flags clause (" + r.offending_clause +
               ") instead of (ii)";
  }
  return {};
}

// ---- criterion 6 ------------------------------------------------------------

std::string criterion_partitions() {
  try {
    for (const auto& [l, s, t] : t3_grid()) {
      const auto a = adjacency_matrix(subdivide(hyperflower(l, s, t)).hypergraph);
      const auto q = check_equitable(a, subdivided_hyperflower_partition(l, s, t), 1e-10);
      if (!containment_check(q, a, 1e-8))
        return "hyperflower containment fails at l=" + std::to_string(l);
    }
    for (const auto& [l, s, t] : t5_grid()) {
      const auto a =
          adjacency_matrix(subdivide(petal_overlapped_hyperflower(l, s, t)).hypergraph);
      const auto q = check_equitable(a, subdivided_petal_overlapped_partition(l, s, t), 1e-10);
      if (!containment_check(q, a, 1e-8))
        return "petal-overlapped containment fails at l=" + std::to_string(l);
    }
    for (std::size_t k = 2; k <= 6; ++k) {
      const auto a = adjacency_matrix(subdivide(squid_like(k)).hypergraph);
      const auto q = check_equitable(a, subdivided_squid_like_partition(k), 1e-10);
      if (!containment_check(q, a, 1e-8))
        return "squid-like containment fails at k=" + std::to_string(k);
    }
  } catch (const NotEquitableError& e) {
    return std::string("a canonical partition failed the equitability check: ") + e.what();
  }
  return {};
}

// ---- criterion 7 ------------------------------------------------------------

std::string criterion_witnesses() {
  for (const auto& [l, s, t] : t3_grid()) {
    const auto a = adjacency_matrix(subdivide(hyperflower(l, s, t)).hypergraph);
    for (const auto& w : hyperflower_witnesses(l, s, t)) {
      const double r = witness_residual(a, w);
      if (r > 1e-8)
        return "hyperflower witness '" + w.family + "' residual " + fmt(r) + " at l=" +
               std::to_string(l) + ",s=" + std::to_string(s) + ",t=" + std::to_string(t);
    }
  }
  for (const auto& [l, s, t] : t5_grid()) {
    const auto a = adjacency_matrix(subdivide(petal_overlapped_hyperflower(l, s, t)).hypergraph);
    for (const auto& w : petal_overlapped_witnesses(l, s, t)) {
      const double r = witness_residual(a, w);
      if (r > 1e-8)
        return "petal-overlapped witness '" + w.family + "' residual " + fmt(r) + " at l=" +
               std::to_string(l) + ",s=" + std::to_string(s) + ",t=" + std::to_string(t);
    }
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto a = adjacency_matrix(subdivide(squid_like(k)).hypergraph);
    for (const auto& w : squid_like_witnesses(k)) {
      const double r = witness_residual(a, w);
      if (r > 1e-8)
        return "squid-like witness '" + w.family + "' residual " + fmt(r) + " at k=" +
               std::to_string(k);
    }
  }
  return {};
}

// ---- criterion 8 ------------------------------------------------------------

std::string criterion_cospectral() {
  const auto shrik = shrikhande_graph();
  const auto rook = rook_graph_4x4();

  const auto base = are_cospectral(shrik, rook, 1e-9);
  if (!base.cospectral || base.deviation > 1e-9)
    return "16-vertex pair deviates by " + fmt(base.deviation);
  const auto iso = are_isomorphic(shrik, rook, 1'000'000);
  if (iso.verdict != IsoVerdict::non_isomorphic)
    return "16-vertex pair not refuted within the node budget";

  const auto cert = cospectral_pair_t7(shrik, rook, 3, 1e-7, 1'000'000);
  if (cert.first.vertex_count() != 112)
    return "t7 construction has " + std::to_string(cert.first.vertex_count()) + " vertices";
  if (cert.max_deviation > 1e-7)
    return "t7 subdivided spectra deviate by " + fmt(cert.max_deviation);

  std::uint64_t seed = 424242;
  const Hypergraph shuffle_base = subdivide(hyperflower(4, 2, 3)).hypergraph;
  for (int rep = 0; rep < 100; ++rep) {
    const auto cmp = are_cospectral(shuffle_base, shuffled(shuffle_base, seed++), 1e-10);
    if (!cmp.cospectral)
      return "relabeling " + std::to_string(rep) + " deviates by " + fmt(cmp.deviation);
  }
  return {};
}

// ---- criterion 9 ------------------------------------------------------------

std::string run_in_dir(const fs::path& dir, const std::string& tail) {
  const std::string command = "cd " + dir.string() + " && HYPERSUB=" +
                              std::string(HYPERSUB_CLI_PATH) + " && " + tail + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "popen failed";
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) output += buf.data();
  if (pclose(pipe) != 0) return "FAILED: " + output;
  return output;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string criterion_determinism() {
  const auto root = fs::temp_directory_path() / "hypersub_acceptance";
  fs::remove_all(root);
  const auto da = root / "a";
  const auto db = root / "b";
  fs::create_directories(da);
  fs::create_directories(db);

  // identical (input, flags, seed, version) must give identical bytes;
  // relative output paths keep the embedded manifests identical too
  const std::string pipeline =
      "$HYPERSUB gen --family petal_overlapped --params l=4,s=2,t=2 --shuffle --seed 7 "
      "--out g.json && $HYPERSUB subdivide g.json --out s.json --provenance p.json && "
      "$HYPERSUB spectrum s.json --format json --out spec.json";
  for (const auto& dir : {da, db}) {
    const auto log = run_in_dir(dir, pipeline);
    if (log.rfind("FAILED", 0) == 0) return "pipeline failed: " + log;
  }
  for (const char* name : {"g.json", "s.json", "p.json", "spec.json"}) {
    const auto a = slurp(da / name);
    const auto b = slurp(db / name);
    if (a.empty() || a != b) return std::string(name) + " differs between identical runs";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. counting identities (|V(S)| = n+m, |E(S)| = m*k, prediction size)",
       criterion_counting},
      {"2. t1 regular subdivisions vs eigensolver (tol 1e-6, incl. m<n cancellation)",
       criterion_t1},
      {"3. t2 graph powers vs eigensolver (k in 3..5, tol 1e-6)", criterion_t2},
      {"4. t3/t4 hyperflowers vs eigensolver + clause multiplicities + specialization",
       criterion_t3_t4},
      {"5. t5/t6 structural vs eigensolver; closed forms audited with named clauses",
       criterion_t5_t6},
      {"6. canonical partitions equitable (1e-10) with spectrum containment (1e-8)",
       criterion_partitions},
      {"7. eigenvector witnesses with residual <= 1e-8 on all grids", criterion_witnesses},
      {"8. cospectral constructions (16-vertex pair, 112-vertex t7, 100 relabelings)",
       criterion_cospectral},
      {"9. byte-identical CLI artifacts for identical inputs and seed",
       criterion_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "[PASS] " << criterion.name << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << criterion.name << " -- " << detail << "\n";
    }
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
