// Copyright 2026 The Schmidt Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHMIDT_SVG_WRITER_H_
#define SCHMIDT_SVG_WRITER_H_

// Minimal SVG output: scatter points and polylines in data coordinates.

#include <string>
#include <utility>
#include <vector>

namespace schmidt {

using XY = std::pair<double, double>;

class SvgWriter {
 public:
  // Maps [xmin, xmax] x [ymin, ymax] onto a width x height canvas with a
  // small margin; y grows upward. Degenerate ranges are widened.
  SvgWriter(double width, double height, double xmin, double xmax, double ymin,
            double ymax);

  // Bounding box of the points, padded by 5%.
  static SvgWriter Fit(const std::vector<XY>& points, double width = 640,
                       double height = 480);

  void Scatter(const std::vector<XY>& points, double radius = 1.5,
               const std::string& color = "black");
  void Polyline(const std::vector<XY>& points,
                const std::string& color = "black", double stroke = 1.0);
  void Title(const std::string& text);

  std::string ToString() const;
  // Throws std::runtime_error if the file cannot be written.
  void Save(const std::string& path) const;

 private:
  double X(double x) const;
  double Y(double y) const;

  double width_, height_;
  double xmin_, xmax_, ymin_, ymax_;
  std::vector<std::string> items_;
};

}  // namespace schmidt

#endif  // SCHMIDT_SVG_WRITER_H_
