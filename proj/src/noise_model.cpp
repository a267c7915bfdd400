#include "polysem/noise_model.hpp"

#include <cmath>
#include <stdexcept>

#include "polysem/metrics.hpp"

namespace polysem {

namespace {

void require_spec_enabled(const NoiseSpec& spec) {
  if (!spec.enabled()) throw std::invalid_argument("noise spec must not be none");
}

}  // namespace

NoisyForwardRecord forward_noisy(const WeightMatrix& W, std::size_t i,
                                 std::span<const double> xi) {
  if (i >= W.rows()) throw std::out_of_range("input index out of range");
  if (xi.size() != W.cols()) throw std::invalid_argument("noise vector length != m");
  const std::size_t n = W.rows();
  const std::size_t m = W.cols();

  NoisyForwardRecord rec;
  rec.input = i;
  rec.xi.assign(xi.begin(), xi.end());
  rec.h.resize(m);
  const auto row_i = W.row(i);
  for (std::size_t k = 0; k < m; ++k) rec.h[k] = row_i[k] + xi[k];

  rec.z.resize(n);
  rec.y.resize(n);
  rec.loss = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double z = 0.0;
    const auto row_j = W.row(j);
    for (std::size_t k = 0; k < m; ++k) z += row_j[k] * rec.h[k];
    rec.z[j] = z;
    rec.y[j] = z > 0.0 ? z : 0.0;
    const double err = rec.y[j] - (j == i ? 1.0 : 0.0);
    rec.loss += err * err;
  }
  return rec;
}

WeightMatrix grad_noisy(const WeightMatrix& W, std::size_t i, std::span<const double> xi) {
  const NoisyForwardRecord rec = forward_noisy(W, i, xi);
  const std::size_t n = W.rows();
  const std::size_t m = W.cols();

  std::vector<double> g(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (rec.z[j] > 0.0) g[j] = 2.0 * (rec.y[j] - (j == i ? 1.0 : 0.0));
  }

  WeightMatrix G(n, m);
  for (std::size_t j = 0; j < n; ++j) {
    if (g[j] == 0.0) continue;
    for (std::size_t k = 0; k < m; ++k) G(j, k) = g[j] * rec.h[k];
  }
  // W^T g lands in row i because the input is the i-th basis vector.
  for (std::size_t j = 0; j < n; ++j) {
    if (g[j] == 0.0) continue;
    const auto row_j = W.row(j);
    for (std::size_t k = 0; k < m; ++k) G(i, k) += g[j] * row_j[k];
  }
  return G;
}

TrainResult train_noisy(const ModelConfig& config) {
  config.validate();
  if (config.lambda != 0.0) {
    throw std::invalid_argument("train_noisy requires lambda == 0 (noise is the only regularizer)");
  }
  const std::size_t n = static_cast<std::size_t>(config.n);
  const std::size_t m = static_cast<std::size_t>(config.m);

  Rng init_rng = Rng::for_stream(config.seed, Stream::init);
  WeightMatrix W = init_weights(config, init_rng);
  Rng noise_rng = Rng::for_stream(config.seed, Stream::noise);

  TrainingTrace trace;
  fill_run_metadata(trace, config, "noisy");

  const auto record = [&](std::int64_t step) {
    // The recorded loss is the noiseless reconstruction loss: deterministic
    // and comparable across noise settings.
    const double loss = loss_l1(W, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const RowMetrics rm = row_metrics(W, i);
      trace.records.push_back({step, config.t_of_step(step), static_cast<std::int32_t>(i), rm.l1,
                               rm.l2sq, rm.l4p4, rm.nonzero_count, loss});
    }
  };

  std::vector<double> xi(m), h(m), g(n), grad_sum(n * m);
  for (std::int64_t s = 1; s <= config.steps; ++s) {
    std::fill(grad_sum.begin(), grad_sum.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) xi[k] = config.noise.sample(noise_rng);
      const auto row_i = W.row(i);
      for (std::size_t k = 0; k < m; ++k) h[k] = row_i[k] + xi[k];
      for (std::size_t j = 0; j < n; ++j) {
        double z = 0.0;
        const auto row_j = W.row(j);
        for (std::size_t k = 0; k < m; ++k) z += row_j[k] * h[k];
        g[j] = z > 0.0 ? 2.0 * (z - (j == i ? 1.0 : 0.0)) : 0.0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (g[j] == 0.0) continue;
        double* out_j = grad_sum.data() + j * m;
        for (std::size_t k = 0; k < m; ++k) out_j[k] += g[j] * h[k];
        double* out_i = grad_sum.data() + i * m;
        const auto row_j = W.row(j);
        for (std::size_t k = 0; k < m; ++k) out_i[k] += g[j] * row_j[k];
      }
    }
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto row = W.row(i);
      const double* gs = grad_sum.data() + i * m;
      for (std::size_t k = 0; k < m; ++k) {
        row[k] -= config.eta * gs[k];
        finite = finite && std::isfinite(row[k]);
      }
    }
    if (!finite) {
      throw DivergenceError(s, "non-finite weight at step " + std::to_string(s));
    }
    if (s % config.record_every == 0 || s == config.steps) record(s);
  }
  return TrainResult{std::move(W), std::move(trace)};
}

double analytic_fourth_moment(std::span<const double> w_row, const NoiseSpec& spec) {
  require_spec_enabled(spec);
  const RowMetrics rm = row_metrics(w_row, 0.0);
  const double s2 = spec.variance();
  const double mu4 = spec.fourth_moment();
  return 3.0 * s2 * s2 * rm.l2sq * rm.l2sq + rm.l4p4 * (mu4 - 3.0 * s2 * s2);
}

double analytic_cross_moment(std::span<const double> w_row, const NoiseSpec& spec) {
  require_spec_enabled(spec);
  const RowMetrics rm = row_metrics(w_row, 0.0);
  const double s2 = spec.variance();
  const double mu4 = spec.fourth_moment();
  return rm.l2sq * (mu4 + (static_cast<double>(w_row.size()) - 1.0) * s2 * s2);
}

double implicit_reg_term(std::span<const double> w_row, const NoiseSpec& spec, double eta) {
  require_spec_enabled(spec);
  const RowMetrics rm = row_metrics(w_row, 0.0);
  const double s2 = spec.variance();
  return 16.0 * eta * eta * s2 * s2 * rm.l4p4 * spec.excess_kurtosis();
}

}  // namespace polysem
