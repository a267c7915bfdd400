#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysem/config.hpp"
#include "polysem/matrix.hpp"
#include "polysem/metrics.hpp"
#include "polysem/trace.hpp"

namespace polysem {

// The three forces acting on one encoding row, with the common constant
// factor on the two quadratic terms dropped (it only rescales lambda and
// training time). The exact gradient of loss_l1 with respect to row i is
// -(4*(feature_benefit + interference) + regularization... sign folded):
// grad = -4*feature_benefit - 4*interference + lambda*sign(row).
struct ForceDecomposition {
  std::vector<double> feature_benefit;  // (1 - |Wi|^2) Wi
  std::vector<double> interference;     // -sum_{j!=i} relu(Wi.Wj) Wj
  std::vector<double> regularization;   // -lambda * sign(Wi), sign(0) = 0
};

struct SparsityThreshold {
  double theta = 0.0;  // lambda / (1 - |Wi|^2)
};

// A step produced non-finite weights; eta is too large for this config.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::int64_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

// Total squared-error loss with l1 penalty:
//   sum_i [ (1 - |Wi|^2)^2 + sum_{j!=i} relu(Wi.Wj)^2 + lambda*|Wi|_1 ].
// One Gram matrix W W^T is computed per call.
double loss_l1(const WeightMatrix& W, double lambda);

ForceDecomposition forces(const WeightMatrix& W, std::size_t i, double lambda);

// theta = lambda / (1 - |Wi|^2): entries above grow, entries below shrink.
// Throws std::domain_error when |Wi|^2 >= 1 (no entry shrinks).
SparsityThreshold sparsity_threshold(const WeightMatrix& W, std::size_t i, double lambda);

// Incremental trainer. Phase 1 adds eta*(feature_benefit + interference)
// to every row, Jacobi-style from the pre-step matrix; phase 2
// soft-thresholds every entry by eta*lambda, so zeros are exact and, with
// interference off, absorbing.
class L1Stepper {
 public:
  L1Stepper(ModelConfig config, WeightMatrix start);

  void step();
  const WeightMatrix& weights() const { return W_; }
  std::int64_t steps_taken() const { return steps_taken_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void step_dense();
  void step_rows_independent();

  ModelConfig cfg_;
  WeightMatrix W_;
  WeightMatrix next_;                            // workspace (interference path)
  std::vector<std::vector<std::size_t>> alive_;  // per-row surviving entries
  std::vector<double> gram_;
  std::int64_t steps_taken_ = 0;
  std::vector<std::string> warnings_;
};

// One two-phase update of the full matrix.
WeightMatrix step_l1(const WeightMatrix& W, const ModelConfig& config);

struct TrainResult {
  WeightMatrix final;
  TrainingTrace trace;
};

// Runs `steps` updates from the seeded init; records per-row metrics and
// loss every record_every steps (and at the final step).
TrainResult train_l1(const ModelConfig& config);

}  // namespace polysem
