#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "polysem/noise.hpp"

namespace polysem {

// Hyperparameters of a single training run, shared by both models.
// Training time t is eta multiplied by the step index.
struct ModelConfig {
  int n = 8;                         // feature count
  int m = 16;                        // hidden width
  double lambda = 0.0;               // l1 coefficient
  double eta = 0.1;                  // learning rate per step
  double init_scale = 0.9;           // entrywise init std is init_scale/sqrt(m)
  bool interference_enabled = true;  // cross-row force on/off
  NoiseSpec noise = NoiseSpec::none();
  std::uint64_t seed = 1;
  std::int64_t steps = 10000;
  std::int64_t record_every = 100;   // trace sampling stride

  // Hard violations throw std::invalid_argument; soft issues (such as
  // lambda above 1/sqrt(m)) come back as warnings.
  std::vector<std::string> validate() const;

  double t_of_step(std::int64_t step) const { return eta * static_cast<double>(step); }
};

}  // namespace polysem
