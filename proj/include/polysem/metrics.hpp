#pragma once
#include <optional>
#include <span>

#include "polysem/matrix.hpp"

namespace polysem {

// Entries with |w| <= eps are treated as zero when counting. The l1 stepper
// produces exact zeros, so any small positive eps gives the same count there.
inline constexpr double kDefaultEpsZero = 1e-8;

// Norm and sparsity summary of one encoding row.
struct RowMetrics {
  double l1 = 0.0;
  double l2sq = 0.0;
  double l4p4 = 0.0;
  int nonzero_count = 0;
  // Var[X]/E[X]^2 over the absolute values of nonzero entries;
  // empty when the row has no nonzero entries.
  std::optional<double> relative_variance;
};

RowMetrics row_metrics(std::span<const double> row, double eps_zero = kDefaultEpsZero);

// Bounds-checked row access; throws std::out_of_range.
RowMetrics row_metrics(const WeightMatrix& W, std::size_t i, double eps_zero = kDefaultEpsZero);

}  // namespace polysem
