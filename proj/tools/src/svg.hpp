#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lejalab::cli {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

// Static line chart. With log2_x the x axis is logarithmic (row sizes).
std::string line_plot(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<Series>& series,
                      bool log2_x = true);

}  // namespace lejalab::cli
