#include "polysem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace polysem {

std::vector<FeatureAssignment> feature_assignments(const WeightMatrix& W) {
  std::vector<FeatureAssignment> out(W.rows());
  for (std::size_t i = 0; i < W.rows(); ++i) {
    const auto row = W.row(i);
    std::size_t best = 0;
    double best_abs = std::fabs(row[0]);
    for (std::size_t k = 1; k < row.size(); ++k) {
      const double a = std::fabs(row[k]);
      if (a > best_abs) {
        best = k;
        best_abs = a;
      }
    }
    const double l2sq = W.row_l2sq(i);
    out[i].winner = static_cast<std::int32_t>(best);
    out[i].winner_weight = row[best];
    out[i].dominance = l2sq > 0.0 ? row[best] * row[best] / l2sq : 0.0;
  }
  return out;
}

CollisionReport classify_collisions(const WeightMatrix& W_init) {
  const auto assignments = feature_assignments(W_init);
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i].winner_weight == 0.0) {
      throw std::domain_error("degenerate initialization: row " + std::to_string(i) +
                              " is all zero");
    }
  }

  CollisionReport report;
  std::map<std::int32_t, std::vector<std::size_t>> by_neuron;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    by_neuron[assignments[i].winner].push_back(i);
  }
  for (const auto& [neuron, features] : by_neuron) {
    for (std::size_t a = 0; a < features.size(); ++a) {
      for (std::size_t b = a + 1; b < features.size(); ++b) {
        const std::size_t i = features[a];
        const std::size_t j = features[b];
        const bool benign = std::signbit(assignments[i].winner_weight) !=
                            std::signbit(assignments[j].winner_weight);
        report.collisions.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                                     neuron, benign});
        if (benign) {
          ++report.benign_count;
        } else {
          ++report.malign_count;
        }
      }
    }
  }
  const double n = static_cast<double>(W_init.rows());
  const double m = static_cast<double>(W_init.cols());
  report.expected_polysemantic = n * (n - 1.0) / (4.0 * m);
  return report;
}

PolysemanticCount count_polysemantic(const WeightMatrix& W_final, double weight_threshold) {
  if (!(weight_threshold > 0.0 && weight_threshold < 1.0)) {
    throw std::invalid_argument("weight_threshold must lie in (0, 1)");
  }
  PolysemanticCount out;
  out.features_per_neuron.assign(W_final.cols(), {});
  for (std::size_t i = 0; i < W_final.rows(); ++i) {
    const auto row = W_final.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (std::fabs(row[k]) >= weight_threshold) {
        out.features_per_neuron[k].push_back(static_cast<std::int32_t>(i));
      }
    }
  }
  for (const auto& features : out.features_per_neuron) {
    if (features.size() >= 2) ++out.count;
  }
  return out;
}

double predicted_l1(double t, std::size_t m, double lambda) {
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const double sqrt_m = std::sqrt(static_cast<double>(m));
  if (t <= 1.0 / (lambda * sqrt_m)) return sqrt_m;
  if (t >= 1.0 / lambda) return 1.0;
  return 1.0 / (lambda * t);
}

double predicted_m_prime(double t, std::size_t m, double lambda) {
  const double v = predicted_l1(t, m, lambda);
  return v * v;
}

AffineFit affine_spacing_fit(std::span<const double> row_initial,
                             std::span<const double> row_at_t, double eps_zero) {
  if (row_initial.size() != row_at_t.size()) {
    throw std::invalid_argument("row length mismatch");
  }
  std::vector<std::size_t> survivors;
  for (std::size_t k = 0; k < row_at_t.size(); ++k) {
    if (std::fabs(row_at_t[k]) > eps_zero) survivors.push_back(k);
  }
  if (survivors.size() < 2) {
    throw std::domain_error("affine fit undefined: fewer than 2 surviving entries");
  }

  double sx = 0.0, sy = 0.0;
  for (std::size_t k : survivors) {
    sx += std::fabs(row_initial[k]);
    sy += std::fabs(row_at_t[k]);
  }
  const double count = static_cast<double>(survivors.size());
  const double mx = sx / count;
  const double my = sy / count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k : survivors) {
    const double dx = std::fabs(row_initial[k]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::fabs(row_at_t[k]) - my);
  }

  AffineFit fit;
  fit.scale = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.offset = my - fit.scale * mx;
  for (std::size_t k : survivors) {
    const double r = std::fabs(row_at_t[k]) - (fit.offset + fit.scale * std::fabs(row_initial[k]));
    fit.max_residual = std::max(fit.max_residual, std::fabs(r));
  }
  return fit;
}

namespace {

// Population relative variance of the first count values of v minus shift.
// A zero (or negative) mean is treated as relative variance 0.
double shifted_relative_variance(const std::vector<double>& v, std::size_t count, double shift) {
  if (count == 0) return 0.0;
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double x = v[k] - shift;
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / static_cast<double>(count);
  if (!(mean > 0.0)) return 0.0;
  const double var = std::max(sumsq / static_cast<double>(count) - mean * mean, 0.0);
  return var / (mean * mean);
}

}  // namespace

RelVarBounds relative_variance_bounds(std::span<const double> row_initial, int m_prime) {
  const std::size_t m = row_initial.size();
  if (m_prime < 1 || static_cast<std::size_t>(m_prime) > m) {
    throw std::invalid_argument("m_prime must lie in [1, m]");
  }
  std::vector<double> mags(m);
  for (std::size_t k = 0; k < m; ++k) mags[k] = std::fabs(row_initial[k]);
  std::sort(mags.begin(), mags.end(), std::greater<>());

  const auto mp = static_cast<std::size_t>(m_prime);
  const double low_shift = mp == m ? 0.0 : mags[mp];
  const double high_shift = mags[mp - 1];
  RelVarBounds bounds;
  bounds.low = shifted_relative_variance(mags, mp, low_shift);
  bounds.high = shifted_relative_variance(mags, mp, high_shift);
  if (bounds.high < bounds.low) std::swap(bounds.low, bounds.high);
  return bounds;
}

}  // namespace polysem
