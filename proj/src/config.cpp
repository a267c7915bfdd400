#include "polysem/config.hpp"

#include <cmath>
#include <stdexcept>

namespace polysem {

std::vector<std::string> ModelConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
  if (init_scale < 0.0) throw std::invalid_argument("init_scale must be >= 0");
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (record_every < 1) throw std::invalid_argument("record_every must be >= 1");

  std::vector<std::string> warnings;
  if (lambda > 1.0 / std::sqrt(static_cast<double>(m))) {
    warnings.push_back("lambda exceeds 1/sqrt(m); regularization may kill all weights");
  }
  return warnings;
}

}  // namespace polysem
