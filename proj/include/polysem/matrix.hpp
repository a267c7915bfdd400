#pragma once
#include <cstddef>
#include <span>
#include <vector>

#include "polysem/config.hpp"
#include "polysem/rng.hpp"

namespace polysem {

// Dense row-major n x m real matrix. Row i is the encoding of feature i
// across the m hidden neurons. Dimensions are fixed after construction;
// only the explicit neuron-split operation produces a wider matrix.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t k) { return data_[i * cols_ + k]; }
  double operator()(std::size_t i, std::size_t k) const { return data_[i * cols_ + k]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const double> data() const { return data_; }

  bool all_finite() const;

  double dot_rows(std::size_t i, std::size_t j) const;
  double row_l2sq(std::size_t i) const { return dot_rows(i, i); }

  bool operator==(const WeightMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Entries i.i.d. normal, mean 0, std init_scale/sqrt(m). Seeded draws are
// bit-identical run to run.
WeightMatrix init_weights(const ModelConfig& config, Rng& rng);

}  // namespace polysem
