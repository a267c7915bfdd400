#include "polysem/l1_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace polysem {

namespace {

inline double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

inline double soft_threshold(double x, double tau) {
  if (x > tau) return x - tau;
  if (x < -tau) return x + tau;
  return 0.0;
}

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

double loss_l1(const WeightMatrix& W, double lambda) {
  const std::size_t n = W.rows();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double l1 = 0.0;
    for (double w : W.row(i)) l1 += std::fabs(w);
    const double diag = W.dot_rows(i, i);
    total += (1.0 - diag) * (1.0 - diag) + lambda * l1;
  }
  // Off-diagonal Gram entries, each unordered pair contributing twice.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = relu(W.dot_rows(i, j));
      total += 2.0 * r * r;
    }
  }
  return total;
}

ForceDecomposition forces(const WeightMatrix& W, std::size_t i, double lambda) {
  if (i >= W.rows()) throw std::out_of_range("row index out of range");
  const std::size_t m = W.cols();
  ForceDecomposition out;
  out.feature_benefit.assign(m, 0.0);
  out.interference.assign(m, 0.0);
  out.regularization.assign(m, 0.0);

  const auto row_i = W.row(i);
  const double gain = 1.0 - W.row_l2sq(i);
  for (std::size_t k = 0; k < m; ++k) {
    out.feature_benefit[k] = gain * row_i[k];
    out.regularization[k] = -lambda * sign_of(row_i[k]);
  }
  for (std::size_t j = 0; j < W.rows(); ++j) {
    if (j == i) continue;
    const double g = W.dot_rows(i, j);
    if (g <= 0.0) continue;
    const auto row_j = W.row(j);
    for (std::size_t k = 0; k < m; ++k) out.interference[k] -= g * row_j[k];
  }
  return out;
}

SparsityThreshold sparsity_threshold(const WeightMatrix& W, std::size_t i, double lambda) {
  if (i >= W.rows()) throw std::out_of_range("row index out of range");
  const double l2sq = W.row_l2sq(i);
  if (l2sq >= 1.0) {
    throw std::domain_error("sparsity threshold undefined: |Wi|^2 >= 1 (all entries grow)");
  }
  return SparsityThreshold{lambda / (1.0 - l2sq)};
}

L1Stepper::L1Stepper(ModelConfig config, WeightMatrix start)
    : cfg_(std::move(config)), W_(std::move(start)) {
  warnings_ = cfg_.validate();
  if (W_.rows() != static_cast<std::size_t>(cfg_.n) ||
      W_.cols() != static_cast<std::size_t>(cfg_.m)) {
    throw std::invalid_argument("weight matrix does not match config dimensions");
  }

  double max_abs = 0.0;
  alive_.resize(W_.rows());
  for (std::size_t i = 0; i < W_.rows(); ++i) {
    alive_[i].reserve(W_.cols());
    for (std::size_t k = 0; k < W_.cols(); ++k) {
      const double w = W_(i, k);
      max_abs = std::max(max_abs, std::fabs(w));
      if (w != 0.0) alive_[i].push_back(k);
    }
  }
  if (cfg_.eta * cfg_.lambda >= max_abs && max_abs > 0.0) {
    warnings_.push_back("eta*lambda is at least the largest |W| entry; every weight dies in one step");
  }

  if (cfg_.interference_enabled && cfg_.n > 1) {
    next_ = W_;
    gram_.assign(W_.rows() * W_.rows(), 0.0);
  }
}

// Interference cannot act with a single row or when disabled; feature
// benefit scales each surviving entry and the prox never revives zeros,
// so only the per-row survivor lists need visiting.
void L1Stepper::step_rows_independent() {
  const double eta = cfg_.eta;
  const double tau = eta * cfg_.lambda;
  for (std::size_t i = 0; i < W_.rows(); ++i) {
    auto& alive = alive_[i];
    double l2sq = 0.0;
    for (std::size_t k : alive) {
      const double w = W_(i, k);
      l2sq += w * w;
    }
    const double growth = 1.0 + eta * (1.0 - l2sq);
    std::size_t kept = 0;
    for (std::size_t k : alive) {
      double w = soft_threshold(W_(i, k) * growth, tau);
      if (!std::isfinite(w)) {
        throw DivergenceError(steps_taken_ + 1,
                              "non-finite weight at step " + std::to_string(steps_taken_ + 1));
      }
      W_(i, k) = w;
      if (w != 0.0) alive[kept++] = k;
    }
    alive.resize(kept);
  }
}

void L1Stepper::step_dense() {
  const std::size_t n = W_.rows();
  const std::size_t m = W_.cols();
  const double eta = cfg_.eta;
  const double tau = eta * cfg_.lambda;

  // Survivor lists and row norms from the pre-step matrix.
  std::vector<double> l2sq(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& alive = alive_[i];
    alive.clear();
    for (std::size_t k = 0; k < m; ++k) {
      const double w = W_(i, k);
      if (w != 0.0) {
        alive.push_back(k);
        l2sq[i] += w * w;
      }
    }
  }

  // Gram matrix over the shorter survivor list of each pair.
  for (std::size_t i = 0; i < n; ++i) {
    gram_[i * n + i] = l2sq[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& shorter = alive_[i].size() <= alive_[j].size() ? alive_[i] : alive_[j];
      const std::size_t other = alive_[i].size() <= alive_[j].size() ? j : i;
      const std::size_t self = other == j ? i : j;
      double dot = 0.0;
      for (std::size_t k : shorter) dot += W_(self, k) * W_(other, k);
      gram_[i * n + j] = dot;
      gram_[j * n + i] = dot;
    }
  }

  // Phase 1, Jacobi-style: every row update reads the pre-step matrix.
  next_ = W_;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = eta * (1.0 - l2sq[i]);
    for (std::size_t k : alive_[i]) next_(i, k) += a * W_(i, k);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double g = gram_[i * n + j];
      if (g <= 0.0) continue;
      const double c = eta * g;
      for (std::size_t k : alive_[j]) next_(i, k) -= c * W_(j, k);
    }
  }

  // Phase 2: soft-threshold everything.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const double w = soft_threshold(next_(i, k), tau);
      if (!std::isfinite(w)) {
        throw DivergenceError(steps_taken_ + 1,
                              "non-finite weight at step " + std::to_string(steps_taken_ + 1));
      }
      next_(i, k) = w;
    }
  }
  std::swap(W_, next_);
}

void L1Stepper::step() {
  if (cfg_.interference_enabled && cfg_.n > 1) {
    step_dense();
  } else {
    step_rows_independent();
  }
  ++steps_taken_;
}

WeightMatrix step_l1(const WeightMatrix& W, const ModelConfig& config) {
  L1Stepper stepper(config, W);
  stepper.step();
  return stepper.weights();
}

TrainResult train_l1(const ModelConfig& config) {
  Rng rng = Rng::for_stream(config.seed, Stream::init);
  WeightMatrix W = init_weights(config, rng);

  L1Stepper stepper(config, std::move(W));

  TrainingTrace trace;
  fill_run_metadata(trace, config, "l1");
  for (std::size_t w = 0; w < stepper.warnings().size(); ++w) {
    trace.add_meta("warning." + std::to_string(w), stepper.warnings()[w]);
  }

  const auto record = [&](std::int64_t step) {
    const WeightMatrix& cur = stepper.weights();
    const double loss = loss_l1(cur, config.lambda);
    for (std::size_t i = 0; i < cur.rows(); ++i) {
      const RowMetrics rm = row_metrics(cur, i);
      trace.records.push_back({step, config.t_of_step(step), static_cast<std::int32_t>(i), rm.l1,
                               rm.l2sq, rm.l4p4, rm.nonzero_count, loss});
    }
  };

  for (std::int64_t s = 1; s <= config.steps; ++s) {
    stepper.step();
    if (s % config.record_every == 0 || s == config.steps) record(s);
  }
  return TrainResult{stepper.weights(), std::move(trace)};
}

}  // namespace polysem
