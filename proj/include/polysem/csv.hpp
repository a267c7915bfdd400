#pragma once
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "polysem/matrix.hpp"
#include "polysem/trace.hpp"

namespace polysem {

// 17 significant digits: round-trip exact for 64-bit floats.
std::string format_g17(double v);
// Compact %g rendering for cell ids and labels.
std::string format_g(double v);

// Trace files carry `# key = value` metadata lines, a fixed header row
// (step,t,row,l1,l2sq,l4p4,m_prime,loss), then one line per record.
void write_trace_csv(const TrainingTrace& trace, const std::filesystem::path& path);
TrainingTrace read_trace_csv(const std::filesystem::path& path);

using MetadataList = std::vector<std::pair<std::string, std::string>>;

void write_matrix_csv(const WeightMatrix& W, const std::filesystem::path& path,
                      const MetadataList& metadata = {});
WeightMatrix read_matrix_csv(const std::filesystem::path& path);

}  // namespace polysem
