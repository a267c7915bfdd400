#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "polysem/matrix.hpp"
#include "polysem/metrics.hpp"

namespace polysem {

// Two features whose largest-magnitude entries land on the same neuron at
// initialization. Benign when the signs differ (both can keep the neuron),
// malign when they agree (interference evicts at least one).
struct Collision {
  std::int32_t i = 0;
  std::int32_t j = 0;
  std::int32_t neuron = 0;
  bool benign = false;
};

struct CollisionReport {
  std::vector<Collision> collisions;  // pairwise; a 3-way collision lists 3 pairs
  std::size_t benign_count = 0;
  std::size_t malign_count = 0;
  double expected_polysemantic = 0.0;  // n(n-1)/(4m), exact rather than asymptotic
};

// Argmax ties break towards the lowest neuron index; a zero row throws
// std::domain_error (degenerate initialization).
CollisionReport classify_collisions(const WeightMatrix& W_init);

struct FeatureAssignment {
  std::int32_t winner = 0;      // argmax_k |W_ik|
  double winner_weight = 0.0;   // signed W_{i,winner}
  double dominance = 0.0;       // winner_weight^2 / |Wi|^2
};

std::vector<FeatureAssignment> feature_assignments(const WeightMatrix& W);

struct PolysemanticCount {
  std::size_t count = 0;  // neurons carrying >= 2 features above threshold
  std::vector<std::vector<std::int32_t>> features_per_neuron;
};

// weight_threshold must lie in (0, 1); trained winner weights sit near 1,
// so any mid-range threshold separates cleanly.
PolysemanticCount count_polysemantic(const WeightMatrix& W_final, double weight_threshold);

// Piecewise |Wi|_1 prediction with all hidden constants set to 1:
// sqrt(m) until t = 1/(lambda sqrt(m)), then 1/(lambda t), then 1.
double predicted_l1(double t, std::size_t m, double lambda);

// Nonzero-count prediction: predicted_l1 squared (starts at m, ends at 1).
double predicted_m_prime(double t, std::size_t m, double lambda);

struct AffineFit {
  double offset = 0.0;
  double scale = 0.0;
  double max_residual = 0.0;
};

// Least-squares fit of |row_at_t| against |row_initial| over the entries
// still nonzero at t. With interference off the true map is affine, so the
// residual measures only discretization and round-off. Fewer than two
// survivors throws std::domain_error.
AffineFit affine_spacing_fit(std::span<const double> row_initial,
                             std::span<const double> row_at_t,
                             double eps_zero = kDefaultEpsZero);

struct RelVarBounds {
  double low = 0.0;
  double high = 0.0;
};

// Bracket on the relative variance of the surviving |entries| when exactly
// m_prime remain: the initial magnitudes translated down by the (m_prime+1)-th
// largest value (low) or by the m_prime-th (high). m_prime = m uses shift 0
// for the lower bracket.
RelVarBounds relative_variance_bounds(std::span<const double> row_initial, int m_prime);

}  // namespace polysem
