#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hypersub/hypergraph.hpp"
#include "hypersub/spectra.hpp"

namespace hypersub {

/// Every predictor assembles the full spectrum of a subdivided family in one
/// of two flavors:
///   - structural: from the block machinery (difference-vector eigenvalue
///     families, quotient matrices, root-of-unity block reductions); this is
///     the normative route;
///   - closed_form: from the closed-form polynomial statements, which the
///     audit treats as potentially mistranscribed and never trusts blindly.
/// For t1 and t2 the two routes coincide, since the closed forms there are
/// the block reduction.
enum class Flavor { structural, closed_form };

struct SpectrumPiece {
  std::string clause;       // "i", "ii", "iii", "iv"
  std::string description;  // human-readable provenance of the values
  std::vector<double> values;
  std::size_t multiplicity;  // each value contributes this many times
};

struct PredictedSpectrum {
  Flavor flavor;
  std::size_t expected_size;  // |V(S(H))|
  std::vector<SpectrumPiece> pieces;

  std::size_t value_count() const noexcept;
  SpectrumMultiset flatten(double group_tolerance = 1e-8) const;
};

/// Subdivision of an r-regular k-uniform hypergraph. The quadratic clauses
/// consume eigenvalues of the *codegree* matrix (the unnormalized one); that
/// is the convention forced by B*B^T = r*I + C, and the only one that agrees
/// with the eigensolver. If m < n, the quadratics at lambda = -r each donate
/// a structural zero which cancels against the negative zero multiplicity.
PredictedSpectrum predict_t1(const Hypergraph& h, Flavor flavor = Flavor::structural);

/// Subdivision of the k-th power of an r-regular graph (ordinary 0/1 graph
/// eigenvalues; k >= 3). The m < n deficit is cancelled by the quadratic
/// factor that splits off the cubic at lambda = -r.
PredictedSpectrum predict_t2(const Hypergraph& g, std::size_t k,
                             Flavor flavor = Flavor::structural);

/// Subdivided hyperflower(l, s, t).
PredictedSpectrum predict_t3(std::size_t l, std::size_t s, std::size_t t,
                             Flavor flavor = Flavor::structural);

/// Subdivided hyperstar(l, k); the structural route is exactly t3(l, 1, k-1).
PredictedSpectrum predict_t4(std::size_t l, std::size_t k,
                             Flavor flavor = Flavor::structural);

/// Subdivided petal-overlapped hyperflower(l, s, t), l >= 3. Clause (iv)
/// reduces to a 3x3 block per l-th root of unity alpha != 1; its eigenvalues
/// are real (asserted to imaginary parts <= 1e-7).
PredictedSpectrum predict_t5(std::size_t l, std::size_t s, std::size_t t,
                             Flavor flavor = Flavor::structural);

/// Subdivided squid_like(k), k >= 2.
PredictedSpectrum predict_t6(std::size_t k, Flavor flavor = Flavor::structural);

// Closed-form coefficient sets, exact integer arithmetic (descending degree).
std::array<long long, 4> t3_clause_iv_coefficients(long long l, long long s, long long t);
std::array<long long, 4> t4_clause_iii_coefficients(long long l, long long k);
std::array<long long, 5> t5_clause_iii_coefficients(long long l, long long s, long long t);
/// alpha_sum = alpha + 1/alpha = 2 cos(2 pi j'/l). With `k4_variant` the
/// lambda coefficient carries an extra (k-4) factor on its last term; the
/// audit tracks that variant and rejects it wherever it deviates.
std::array<double, 4> t5_clause_iv_coefficients(long long s, long long t, double alpha_sum,
                                                bool k4_variant = false);
std::array<long long, 4> t6_clause_ii_coefficients(long long k);
std::array<long long, 5> t6_clause_iii_coefficients(long long k);

/// Explicit eigenvector of the subdivided family's adjacency matrix, built
/// from a difference or root-of-unity support pattern.
struct EigenvectorWitness {
  std::string family;  // "twin-difference", "center-difference", ...
  double eigenvalue;
  std::vector<std::complex<double>> vec;  // indexed by subdivided vertex id
};

std::vector<EigenvectorWitness> hyperflower_witnesses(std::size_t l, std::size_t s,
                                                      std::size_t t);
std::vector<EigenvectorWitness> petal_overlapped_witnesses(std::size_t l, std::size_t s,
                                                           std::size_t t);
std::vector<EigenvectorWitness> squid_like_witnesses(std::size_t k);

/// max_i |(A x - lambda x)_i| / max_i |x_i|
double witness_residual(const SymMatrix& a, const EigenvectorWitness& w);

struct DiscrepancyReport {
  std::string theorem;
  std::string params;
  std::string compared;  // which pair of routes disagreed
  double max_deviation;  // +infinity when a route could not even be assembled
  std::string offending_clause;
  std::string note;
};

struct AuditResult {
  std::string theorem;
  std::string params;
  bool pass = false;
  double structural_vs_oracle = 0.0;
  double closed_vs_oracle = 0.0;
  double closed_vs_structural = 0.0;
  std::vector<DiscrepancyReport> reports;
  std::vector<std::string> notes;
};

/// Runs the structural and closed-form flavors plus the eigensolver oracle
/// and compares all three on the sorted-multiset metric. Reports, never
/// throws, on mathematical disagreement.
AuditResult audit_t1(const Hypergraph& h, double tolerance = 1e-6);
AuditResult audit_t2(const Hypergraph& g, std::size_t k, double tolerance = 1e-6);
AuditResult audit_t3(std::size_t l, std::size_t s, std::size_t t, double tolerance = 1e-6);
AuditResult audit_t4(std::size_t l, std::size_t k, double tolerance = 1e-6);
AuditResult audit_t5(std::size_t l, std::size_t s, std::size_t t, double tolerance = 1e-6);
AuditResult audit_t6(std::size_t k, double tolerance = 1e-6);

/// The full audit grid (regular instances, graph powers with k in 3..5,
/// hyperflowers with l <= 6, s <= 3, t <= 4, petal-overlapped with l in 3..6,
/// s <= 2, t <= 3, squid-like with k in 2..6). Grid points are independent
/// and fan out to `jobs` workers (0 = hardware concurrency).
std::vector<AuditResult> audit_all(double tolerance = 1e-6, unsigned jobs = 0);

}  // namespace hypersub
