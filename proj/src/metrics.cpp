#include "polysem/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace polysem {

RowMetrics row_metrics(std::span<const double> row, double eps_zero) {
  if (eps_zero < 0.0) throw std::invalid_argument("eps_zero must be >= 0");
  RowMetrics out;
  double abs_sum = 0.0;
  double abs_sq_sum = 0.0;
  for (double w : row) {
    const double a = std::fabs(w);
    const double sq = w * w;
    out.l1 += a;
    out.l2sq += sq;
    out.l4p4 += sq * sq;
    if (a > eps_zero) {
      ++out.nonzero_count;
      abs_sum += a;
      abs_sq_sum += sq;
    }
  }
  if (out.nonzero_count > 0) {
    const double mean = abs_sum / out.nonzero_count;
    const double var = abs_sq_sum / out.nonzero_count - mean * mean;
    out.relative_variance = mean > 0.0 ? std::max(var, 0.0) / (mean * mean) : 0.0;
  }
  return out;
}

RowMetrics row_metrics(const WeightMatrix& W, std::size_t i, double eps_zero) {
  if (i >= W.rows()) throw std::out_of_range("row index out of range");
  return row_metrics(W.row(i), eps_zero);
}

}  // namespace polysem
