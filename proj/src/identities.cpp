#include "axial/identities.hpp"

#include <cstdlib>

namespace axial {

uint64_t default_seed_from_env() {
  if (const char* env = std::getenv("AXIAL_LAB_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return static_cast<uint64_t>(v);
  }
  return kDefaultSeed;
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["pass"] = pass();
  j["universe"] = universe;
  nlohmann::json v = nlohmann::json::array();
  for (const auto& viol : violations) {
    v.push_back({{"inputs", viol.inputs}, {"residual", viol.residual}});
  }
  j["violations"] = std::move(v);
  if (seed) {
    j["seed"] = *seed;
  } else {
    j["seed"] = nullptr;
  }
  return j;
}

nlohmann::json FusionReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass();
  nlohmann::json v = nlohmann::json::array();
  for (const auto& viol : violations) {
    v.push_back({{"lambda", eig_name(viol.lambda)},
                 {"mu", eig_name(viol.mu)},
                 {"component", viol.component},
                 {"coefficient", viol.coefficient}});
  }
  j["violations"] = std::move(v);
  return j;
}

}  // namespace axial
