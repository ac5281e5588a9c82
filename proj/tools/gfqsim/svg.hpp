// Copyright 2026 The gfqsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Minimal static SVG figures: line plots and heatmaps. Output depends only
// on the data, so figures are as reproducible as the tables behind them.

#include <string>
#include <vector>

namespace gfqsim::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Axes {
  std::string title;
  std::string x_label;
  std::string y_label;
};

std::string line_plot(const Axes& axes, const std::vector<Series>& series);

/// values[i * ys.size() + j] is the value at (xs[i], ys[j]).
std::string heatmap(const Axes& axes, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::vector<double>& values);

}  // namespace gfqsim::svg
