#include "polysem/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace polysem {

NoiseSpec NoiseSpec::with_std(Kind kind, double sigma) {
  if (sigma < 0.0) throw std::invalid_argument("noise std must be >= 0");
  switch (kind) {
    case Kind::none:
      return none();
    case Kind::bipolar:
      return bipolar(sigma);
    case Kind::gaussian:
      return gaussian(sigma);
    case Kind::uniform:
      return uniform(sigma * std::sqrt(3.0));
  }
  throw std::invalid_argument("unknown noise kind");
}

double NoiseSpec::variance() const {
  switch (kind_) {
    case Kind::none:
      return 0.0;
    case Kind::bipolar:
    case Kind::gaussian:
      return param_ * param_;
    case Kind::uniform:
      return param_ * param_ / 3.0;
  }
  return 0.0;
}

double NoiseSpec::fourth_moment() const {
  const double p2 = param_ * param_;
  switch (kind_) {
    case Kind::none:
      return 0.0;
    case Kind::bipolar:
      return p2 * p2;
    case Kind::gaussian:
      return 3.0 * p2 * p2;
    case Kind::uniform:
      return p2 * p2 / 5.0;
  }
  return 0.0;
}

double NoiseSpec::excess_kurtosis() const {
  switch (kind_) {
    case Kind::none:
      return 0.0;
    case Kind::bipolar:
      return -2.0;
    case Kind::gaussian:
      return 0.0;
    case Kind::uniform:
      return -6.0 / 5.0;
  }
  return 0.0;
}

double NoiseSpec::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::none:
      return 0.0;
    case Kind::bipolar:
      return rng.next_bit() ? param_ : -param_;
    case Kind::gaussian:
      return param_ * rng.next_gaussian();
    case Kind::uniform:
      return param_ * rng.next_signed_unit();
  }
  return 0.0;
}

std::string NoiseSpec::name() const {
  switch (kind_) {
    case Kind::none:
      return "none";
    case Kind::bipolar:
      return "bipolar";
    case Kind::gaussian:
      return "gaussian";
    case Kind::uniform:
      return "uniform";
  }
  return "none";
}

NoiseSpec::Kind NoiseSpec::kind_from_name(const std::string& name) {
  if (name == "none") return Kind::none;
  if (name == "bipolar") return Kind::bipolar;
  if (name == "gaussian") return Kind::gaussian;
  if (name == "uniform") return Kind::uniform;
  throw std::invalid_argument("unknown noise kind: " + name);
}

std::vector<double> sample_noise(const NoiseSpec& spec, std::size_t m, Rng& rng) {
  std::vector<double> xi(m, 0.0);
  if (!spec.enabled()) return xi;
  for (std::size_t j = 0; j < m; ++j) xi[j] = spec.sample(rng);
  return xi;
}

}  // namespace polysem
