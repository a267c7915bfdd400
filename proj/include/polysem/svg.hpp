#pragma once
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "polysem/matrix.hpp"

namespace polysem::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  std::string color;  // empty picks from the default palette
  bool line = true;
  bool markers = false;
  bool dashed = false;
};

// Minimal line/scatter chart with optional log axes. Rendering is pure:
// it never alters the numbers it is given.
struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;

  std::string render(int width = 880, int height = 560) const;
};

std::string render_heatmap(const WeightMatrix& W, const std::string& title);

void write_svg(const std::string& content, const std::filesystem::path& path);

}  // namespace polysem::svg
