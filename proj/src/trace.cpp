#include "polysem/trace.hpp"

#include "polysem/config.hpp"
#include "polysem/csv.hpp"
#include "polysem/version.hpp"

namespace polysem {

const std::string* TrainingTrace::find_meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return &v;
  }
  return nullptr;
}

void fill_run_metadata(TrainingTrace& trace, const ModelConfig& config,
                       const std::string& model_name) {
  trace.add_meta("version", kVersion);
  trace.add_meta("model", model_name);
  trace.add_meta("n", std::to_string(config.n));
  trace.add_meta("m", std::to_string(config.m));
  trace.add_meta("lambda", format_g17(config.lambda));
  trace.add_meta("eta", format_g17(config.eta));
  trace.add_meta("init_scale", format_g17(config.init_scale));
  trace.add_meta("interference", config.interference_enabled ? "true" : "false");
  trace.add_meta("noise", config.noise.name());
  trace.add_meta("noise_param", format_g17(config.noise.param()));
  trace.add_meta("seed", std::to_string(config.seed));
  trace.add_meta("steps", std::to_string(config.steps));
  trace.add_meta("record_every", std::to_string(config.record_every));
}

}  // namespace polysem
