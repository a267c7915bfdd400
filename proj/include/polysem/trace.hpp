#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polysem {

// One sampled (step, row) observation.
struct TraceRecord {
  std::int64_t step = 0;
  double t = 0.0;  // eta * step, exactly
  std::int32_t row = 0;
  double l1 = 0.0;
  double l2sq = 0.0;
  double l4p4 = 0.0;
  std::int32_t m_prime = 0;
  double loss = 0.0;

  bool operator==(const TraceRecord&) const = default;
};

// Time series of per-row metrics for one run. Metadata holds the fully
// resolved configuration and is echoed into every output file.
struct TrainingTrace {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<TraceRecord> records;  // sorted by (step, row)

  void add_meta(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
  }
  const std::string* find_meta(const std::string& key) const;

  bool operator==(const TrainingTrace&) const = default;
};

struct ModelConfig;

// Echoes the resolved config (plus code version) into trace metadata.
void fill_run_metadata(TrainingTrace& trace, const ModelConfig& config,
                       const std::string& model_name);

}  // namespace polysem
