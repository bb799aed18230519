#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "commensurate/instances/finite_model.hpp"
#include "commensurate/instances/model_file.hpp"

namespace testing_support {

inline std::string model_path(const std::string &name) {
  return std::string(MODELS_DIR) + "/" + name + ".model";
}

inline std::shared_ptr<const commensurate::instances::FiniteModel> load(const std::string &name) {
  return std::make_shared<const commensurate::instances::FiniteModel>(
      commensurate::instances::load_model(model_path(name)));
}

inline std::int64_t uniform(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

} // namespace testing_support
