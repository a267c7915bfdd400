#pragma once
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "polysem/config.hpp"
#include "polysem/csv.hpp"
#include "polysem/matrix.hpp"
#include "polysem/rng.hpp"

namespace polysem {

// Resolved configuration of one experiment invocation: a base ModelConfig
// plus sweep axes and output options. Built from per-experiment defaults,
// then overridden by config-file lines and --set pairs in order.
struct ExperimentConfig {
  std::string experiment;  // sparsify | collide | noise-sweep | instance | split-neuron | verify
  ModelConfig model;

  std::vector<int> sweep_m;
  std::vector<double> sweep_lambda;
  std::vector<double> sweep_sigma;
  std::vector<std::string> noise_kinds;
  std::vector<std::uint64_t> seeds;

  std::string out_dir = "out";
  int workers = 0;  // 0 = hardware concurrency
  bool emit_csv = true;
  bool emit_svg = true;
  bool emit_final_matrix = false;

  double poly_threshold = 0.5;   // |W_ik| >= threshold counts as carrying feature i
  double perturb_scale = 1e-3;   // split-neuron probe
  int split_trials = 32;
  bool corrupt_gradient = false; // verify fault injection, for testing the tester

  static ExperimentConfig defaults_for(const std::string& experiment);
  static bool is_known_experiment(const std::string& experiment);

  // Applies one key=value override; throws std::invalid_argument on
  // unknown keys or malformed values.
  void apply_kv(const std::string& key, const std::string& value);
  void apply_file(const std::filesystem::path& path);

  MetadataList resolved_metadata() const;
};

// Duplicates column k into a new last column; both copies are scaled by
// 1/sqrt(2), which preserves every Gram entry Wi.Wj exactly under tied
// weights, then each copy's entries get independent N(0, perturb_scale^2)
// nudges.
WeightMatrix split_neuron(const WeightMatrix& W, std::size_t k, double perturb_scale, Rng& rng);

// Runs the experiment and writes its artifacts under
// <out>/<experiment>/<cell-id>/. Returns a process exit code:
// 0 success, 1 verification failure, 3 numerical divergence in a sweep
// cell. Configuration and I/O problems surface as exceptions.
int run_experiment(const ExperimentConfig& cfg);

// Deterministic helper used by sweep experiments and tests: runs fn(i)
// for i in [0, count) across up to `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace polysem
