#pragma once
#include <cstddef>
#include <span>
#include <vector>

#include "polysem/config.hpp"
#include "polysem/l1_model.hpp"
#include "polysem/matrix.hpp"
#include "polysem/noise.hpp"

namespace polysem {

// One forward pass of the noisy autoencoder on basis input e_i:
//   h = W^T e_i + xi,  z = W h,  y = relu(z),  loss = |y - e_i|^2.
struct NoisyForwardRecord {
  std::size_t input = 0;
  std::vector<double> xi;  // length m
  std::vector<double> h;   // length m
  std::vector<double> z;   // length n
  std::vector<double> y;   // length n
  double loss = 0.0;
};

NoisyForwardRecord forward_noisy(const WeightMatrix& W, std::size_t i,
                                 std::span<const double> xi);

// Exact gradient of the noisy loss through both occurrences of the tied
// weights: G = g h^T + e_i (W^T g)^T with g_j = 2 (y_j - x_j) [z_j > 0].
// The relu subgradient at z_j = 0 is taken as 0.
WeightMatrix grad_noisy(const WeightMatrix& W, std::size_t i, std::span<const double> xi);

// Per step: one full pass over the n basis inputs in fixed order, a fresh
// noise draw for each, gradients accumulated, then a single update
// W <- W - eta * sum G. Requires lambda == 0.
TrainResult train_noisy(const ModelConfig& config);

// E[(Wi.xi)^4] = 3 sigma^4 |Wi|_2^4 + |Wi|_4^4 (mu4 - 3 sigma^4).
double analytic_fourth_moment(std::span<const double> w_row, const NoiseSpec& spec);

// E[(Wi.xi)^2 |xi|^2] = |Wi|_2^2 (mu4 + (m-1) sigma^4).
double analytic_cross_moment(std::span<const double> w_row, const NoiseSpec& spec);

// 16 eta^2 sigma^4 |Wi|_4^4 * excess_kurtosis: the non-rotationally-
// symmetric part of the expected next-step loss. Negative kurtosis makes
// growing |Wi|_4^4 profitable, i.e. pushes the row towards sparsity.
double implicit_reg_term(std::span<const double> w_row, const NoiseSpec& spec, double eta);

}  // namespace polysem
