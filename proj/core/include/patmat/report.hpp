#pragma once

#include <functional>
#include <string>
#include <vector>

#include "patmat/spectra.hpp"

namespace patmat {

// shortest round-trip decimal form, 17 significant digits
std::string format_sig17(double v);

// one CSV line, comma separated, newline terminated
std::string csv_row(const std::vector<std::string>& cells);

// 800 x 500 histogram plot: one <rect> per bin, one frame <path>, and one
// overlay <path> sampled at 512 points from the given density
std::string svg_histogram(const Histogram& h,
                          const std::function<double(double)>& overlay,
                          const std::string& caption);

}  // namespace patmat
