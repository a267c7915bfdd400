#include "polysem/matrix.hpp"

#include <cmath>

namespace polysem {

bool WeightMatrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double WeightMatrix::dot_rows(std::size_t i, std::size_t j) const {
  const double* a = data_.data() + i * cols_;
  const double* b = data_.data() + j * cols_;
  double acc = 0.0;
  for (std::size_t k = 0; k < cols_; ++k) acc += a[k] * b[k];
  return acc;
}

WeightMatrix init_weights(const ModelConfig& config, Rng& rng) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.n);
  const auto m = static_cast<std::size_t>(config.m);
  WeightMatrix W(n, m);
  const double std_dev = config.init_scale / std::sqrt(static_cast<double>(config.m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      W(i, k) = std_dev * rng.next_gaussian();
    }
  }
  return W;
}

}  // namespace polysem
