#include "axial/algebra_io.hpp"

namespace axial {

json field_to_json(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::rationals: return {{"kind", "q"}};
    case FieldKind::prime: return {{"kind", "gf"}, {"p", spec.p}};
    case FieldKind::function: return {{"kind", "func"}, {"vars", spec.vars}};
  }
  fail(errc::load_error, "corrupt field description");
}

FieldSpec field_from_json(const json& j) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(), errc::load_error,
          "field description needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "q") return FieldSpec::rationals();
  if (kind == "gf") {
    require(j.contains("p") && j["p"].is_number_unsigned(), errc::load_error,
            "gf field needs a prime p");
    uint64_t p = j["p"].get<uint64_t>();
    require(p < (1ull << 31), errc::load_error, "modulus too large (need p < 2^31)");
    return FieldSpec::prime(static_cast<uint32_t>(p));
  }
  if (kind == "func") {
    require(j.contains("vars") && j["vars"].is_array(), errc::load_error,
            "func field needs a vars list");
    return FieldSpec::functions(j["vars"].get<std::vector<std::string>>());
  }
  fail(errc::load_error, "unknown field kind '" + kind + "'");
}

FieldSpec peek_field(const json& j) {
  require(j.is_object() && j.contains("field"), errc::load_error,
          "algebra file needs a field description");
  return field_from_json(j["field"]);
}

}  // namespace axial
