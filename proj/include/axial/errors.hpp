#pragma once

#include <stdexcept>
#include <string>

namespace axial {

enum class errc {
  division_by_zero,
  mixed_fields,
  parse_error,
  unknown_variable,
  not_square,
  dimension_mismatch,
  singular_matrix,
  algebra_mismatch,
  invalid_exponent,
  cap_exceeded,
  load_error,
  not_idempotent,
  not_diagonalizable,
  not_primitive,
  not_automorphism,
  inadmissible_eta,
  span_incomplete,
  not_symmetric,
  not_frobenius,
  not_eigenvector,
};

const char* errc_name(errc code);

class AxialError : public std::runtime_error {
 public:
  AxialError(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw AxialError(code, what);
}

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace axial
