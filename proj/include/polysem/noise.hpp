#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "polysem/rng.hpp"

namespace polysem {

// Hidden-layer noise distribution. Every variant is symmetric about zero;
// variance and fourth central moment are exact closed forms so that theory
// oracles built on them carry no estimation error.
class NoiseSpec {
 public:
  enum class Kind { none, bipolar, gaussian, uniform };

  NoiseSpec() = default;

  static NoiseSpec none() { return NoiseSpec(Kind::none, 0.0); }
  // +/- sigma with equal probability. Excess kurtosis -2.
  static NoiseSpec bipolar(double sigma) { return NoiseSpec(Kind::bipolar, sigma); }
  // N(0, sigma^2). Excess kurtosis 0.
  static NoiseSpec gaussian(double sigma) { return NoiseSpec(Kind::gaussian, sigma); }
  // Uniform on [-half_width, half_width]. Excess kurtosis -6/5.
  static NoiseSpec uniform(double half_width) { return NoiseSpec(Kind::uniform, half_width); }

  // Variant chosen by name with a target standard deviation; the uniform
  // variant maps sigma to half_width = sigma * sqrt(3).
  static NoiseSpec with_std(Kind kind, double sigma);

  Kind kind() const { return kind_; }
  bool enabled() const { return kind_ != Kind::none; }
  // sigma for bipolar/gaussian, half_width for uniform, 0 for none.
  double param() const { return param_; }

  double variance() const;
  double fourth_moment() const;
  double excess_kurtosis() const;

  double sample(Rng& rng) const;

  std::string name() const;
  static Kind kind_from_name(const std::string& name);

 private:
  NoiseSpec(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_ = Kind::none;
  double param_ = 0.0;
};

// i.i.d. draws from the spec; the none variant yields an all-zero vector.
std::vector<double> sample_noise(const NoiseSpec& spec, std::size_t m, Rng& rng);

}  // namespace polysem
