#include "hypersub/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hypersub/error.hpp"

namespace hypersub {

Partition::Partition(std::vector<std::vector<VertexId>> cells) : cells_(std::move(cells)) {
  std::size_t total = 0;
  for (auto& cell : cells_) {
    if (cell.empty()) throw Error(errc::bad_parameters, "partition cell is empty");
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
      throw Error(errc::bad_parameters, "partition cell repeats a vertex");
    total += cell.size();
  }
  std::vector<VertexId> all;
  all.reserve(total);
  for (const auto& cell : cells_) all.insert(all.end(), cell.begin(), cell.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(errc::bad_parameters, "partition cells overlap");
}

Partition Partition::single_cell(std::size_t n) {
  std::vector<VertexId> cell(n);
  for (std::size_t i = 0; i < n; ++i) cell[i] = i;
  return Partition({std::move(cell)});
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<VertexId>> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = {i};
  return Partition(std::move(cells));
}

std::size_t Partition::element_count() const noexcept {
  std::size_t total = 0;
  for (const auto& cell : cells_) total += cell.size();
  return total;
}

void Partition::require_covering(std::size_t n) const {
  if (element_count() != n)
    throw Error(errc::bad_parameters, "partition does not cover 0..n-1");
  for (const auto& cell : cells_)
    for (VertexId v : cell)
      if (v >= n)
        throw Error(errc::bad_parameters,
                    "partition member " + std::to_string(v) + " out of range");
}

QuotientMatrix::QuotientMatrix(Matrix entries, Partition source)
    : entries_(std::move(entries)), source_(std::move(source)) {
  if (entries_.rows() != entries_.cols())
    throw Error(errc::bad_parameters, "quotient matrix must be square");
  if (entries_.rows() != source_.cell_count())
    throw Error(errc::bad_parameters, "quotient order must equal the cell count");
}

std::vector<double> QuotientMatrix::eigenvalues() const {
  std::vector<double> weights;
  weights.reserve(source_.cell_count());
  for (const auto& cell : source_.cells()) weights.push_back(static_cast<double>(cell.size()));
  return balanced_eigenvalues(entries_, weights);
}

QuotientMatrix check_equitable(const SymMatrix& a, const Partition& partition,
                               double tolerance) {
  partition.require_covering(a.order());
  const std::size_t cells = partition.cell_count();
  Matrix q(cells, cells);
  for (std::size_t p = 0; p < cells; ++p) {
    const auto& cp = partition.cells()[p];
    for (std::size_t r = 0; r < cells; ++r) {
      const auto& cr = partition.cells()[r];
      double mean = 0.0;
      std::vector<double> sums;
      sums.reserve(cp.size());
      for (VertexId i : cp) {
        double s = 0.0;
        for (VertexId j : cr) s += a(i, j);
        sums.push_back(s);
        mean += s;
      }
      mean /= static_cast<double>(cp.size());
      for (std::size_t x = 0; x < cp.size(); ++x) {
        const double dev = std::abs(sums[x] - mean);
        if (dev > tolerance) throw NotEquitableError(p, r, cp[x], dev);
      }
      q(p, r) = mean;
    }
  }
  return QuotientMatrix(std::move(q), partition);
}

Partition refine_to_equitable(const SymMatrix& a, const Partition& seed,
                              double granularity) {
  if (granularity <= 0.0)
    throw Error(errc::bad_parameters, "refinement granularity must be positive");
  seed.require_covering(a.order());

  std::vector<std::vector<VertexId>> cells = seed.cells();
  for (;;) {
    std::vector<long long> signature;  // flattened, cells.size() entries per vertex
    const std::size_t width = cells.size();
    signature.assign(a.order() * width, 0);
    for (std::size_t v = 0; v < a.order(); ++v)
      for (std::size_t c = 0; c < width; ++c) {
        double s = 0.0;
        for (VertexId u : cells[c]) s += a(v, u);
        signature[v * width + c] = std::llround(s / granularity);
      }

    std::vector<std::vector<VertexId>> next;
    bool split = false;
    for (const auto& cell : cells) {
      std::map<std::vector<long long>, std::vector<VertexId>> groups;
      for (VertexId v : cell) {
        std::vector<long long> key(signature.begin() + static_cast<long>(v * width),
                                   signature.begin() + static_cast<long>((v + 1) * width));
        groups[std::move(key)].push_back(v);
      }
      if (groups.size() > 1) split = true;
      for (auto& [key, members] : groups) next.push_back(std::move(members));
    }
    if (!split) return Partition(std::move(cells));
    cells = std::move(next);
  }
}

ContainmentReport containment_report(const QuotientMatrix& q, const SymMatrix& a,
                                     double tolerance) {
  const auto qs = q.eigenvalues();
  const auto as = eigenvalues(a).values();
  double worst = 0.0;
  std::size_t j = 0;
  for (double mu : qs) {
    while (j < as.size() && as[j] > mu + tolerance) ++j;
    if (j == as.size() || std::abs(as[j] - mu) > tolerance) return {false, worst};
    worst = std::max(worst, std::abs(as[j] - mu));
    ++j;
  }
  return {true, worst};
}

bool containment_check(const QuotientMatrix& q, const SymMatrix& a, double tolerance) {
  return containment_report(q, a, tolerance).contained;
}

}  // namespace hypersub
