#include "axial/errors.hpp"

namespace axial {

const char* errc_name(errc code) {
  switch (code) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_fields: return "MixedFields";
    case errc::parse_error: return "ParseError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::not_square: return "NotSquare";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::load_error: return "LoadError";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_diagonalizable: return "NotDiagonalizable";
    case errc::not_primitive: return "NotPrimitive";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::inadmissible_eta: return "InadmissibleEta";
    case errc::span_incomplete: return "SpanIncomplete";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_frobenius: return "NotFrobenius";
    case errc::not_eigenvector: return "NotEigenvector";
  }
  return "UnknownError";
}

}  // namespace axial
