#include "hypersub/error.hpp"

namespace hypersub {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_edge: return "EmptyEdge";
    case errc::singleton_edge: return "SingletonEdge";
    case errc::dangling_vertex: return "DanglingVertex";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::same_vertex: return "SameVertex";
    case errc::not_uniform: return "NotUniform";
    case errc::not_regular: return "NotRegular";
    case errc::not_a_graph: return "NotAGraph";
    case errc::k_too_small: return "KTooSmall";
    case errc::bad_parameters: return "BadParameters";
    case errc::not_equitable: return "NotEquitable";
    case errc::non_real_root: return "NonRealRoot";
    case errc::cancellation_impossible: return "CancellationImpossible";
    case errc::not_cospectral_input: return "NotCospectralInput";
    case errc::inputs_isomorphic: return "InputsIsomorphic";
    case errc::certification_failed: return "CertificationFailed";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

NotEquitableError::NotEquitableError(std::size_t cell_p, std::size_t cell_q,
                                     std::size_t witness, double deviation)
    : Error(errc::not_equitable,
            "cells (" + std::to_string(cell_p) + ", " + std::to_string(cell_q) +
                "): row sum of vertex " + std::to_string(witness) +
                " deviates from the cell mean by " + std::to_string(deviation)),
      cell_p_(cell_p),
      cell_q_(cell_q),
      witness_(witness),
      deviation_(deviation) {}

}  // namespace hypersub
