#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypersub {

enum class errc {
  empty_edge,
  singleton_edge,
  dangling_vertex,
  vertex_out_of_range,
  duplicate_edge,
  same_vertex,
  not_uniform,
  not_regular,
  not_a_graph,
  k_too_small,
  bad_parameters,
  not_equitable,
  non_real_root,
  cancellation_impossible,
  not_cospectral_input,
  inputs_isomorphic,
  certification_failed,
  parse_error,
};

/// Stable identifier used in diagnostics ("NotUniform", "DanglingVertex", ...).
const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Carries the witness of a failed equitability check: the cell pair, the vertex
/// whose row sum deviates from the cell mean, and the deviation itself.
class NotEquitableError : public Error {
 public:
  NotEquitableError(std::size_t cell_p, std::size_t cell_q, std::size_t witness,
                    double deviation);
  std::size_t cell_p() const noexcept { return cell_p_; }
  std::size_t cell_q() const noexcept { return cell_q_; }
  std::size_t witness() const noexcept { return witness_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::size_t cell_p_;
  std::size_t cell_q_;
  std::size_t witness_;
  double deviation_;
};

}  // namespace hypersub
