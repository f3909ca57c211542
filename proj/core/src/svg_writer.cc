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

#include "schmidt/svg_writer.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace schmidt {
namespace {

constexpr double kMargin = 10.0;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgWriter::SvgWriter(double width, double height, double xmin, double xmax,
                     double ymin, double ymax)
    : width_(width), height_(height), xmin_(xmin), xmax_(xmax), ymin_(ymin),
      ymax_(ymax) {
  if (!(xmax_ > xmin_)) {
    xmin_ -= 0.5;
    xmax_ += 0.5;
  }
  if (!(ymax_ > ymin_)) {
    ymin_ -= 0.5;
    ymax_ += 0.5;
  }
}

SvgWriter SvgWriter::Fit(const std::vector<XY>& points, double width,
                         double height) {
  if (points.empty()) return SvgWriter(width, height, 0, 1, 0, 1);
  double x0 = points[0].first, x1 = x0, y0 = points[0].second, y1 = y0;
  for (const XY& p : points) {
    x0 = std::min(x0, p.first);
    x1 = std::max(x1, p.first);
    y0 = std::min(y0, p.second);
    y1 = std::max(y1, p.second);
  }
  const double px = 0.05 * (x1 - x0), py = 0.05 * (y1 - y0);
  return SvgWriter(width, height, x0 - px, x1 + px, y0 - py, y1 + py);
}

double SvgWriter::X(double x) const {
  return kMargin + (x - xmin_) / (xmax_ - xmin_) * (width_ - 2 * kMargin);
}

double SvgWriter::Y(double y) const {
  return height_ - kMargin -
         (y - ymin_) / (ymax_ - ymin_) * (height_ - 2 * kMargin);
}

void SvgWriter::Scatter(const std::vector<XY>& points, double radius,
                        const std::string& color) {
  std::string g = "<g fill=\"" + Escape(color) + "\">";
  for (const XY& p : points) {
    g += "<circle cx=\"" + Num(X(p.first)) + "\" cy=\"" + Num(Y(p.second)) +
         "\" r=\"" + Num(radius) + "\"/>";
  }
  g += "</g>";
  items_.push_back(std::move(g));
}

void SvgWriter::Polyline(const std::vector<XY>& points,
                         const std::string& color, double stroke) {
  std::string pts;
  for (const XY& p : points) {
    if (!pts.empty()) pts += ' ';
    pts += Num(X(p.first)) + "," + Num(Y(p.second));
  }
  items_.push_back("<polyline fill=\"none\" stroke=\"" + Escape(color) +
                   "\" stroke-width=\"" + Num(stroke) + "\" points=\"" + pts +
                   "\"/>");
}

void SvgWriter::Title(const std::string& text) {
  items_.push_back("<title>" + Escape(text) + "</title>");
}

std::string SvgWriter::ToString() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    Num(width_) + "\" height=\"" + Num(height_) +
                    "\" viewBox=\"0 0 " + Num(width_) + " " + Num(height_) +
                    "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const std::string& item : items_) out += item + "\n";
  out += "</svg>\n";
  return out;
}

void SvgWriter::Save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << ToString();
  if (!f) throw std::runtime_error("cannot write " + path);
}

}  // namespace schmidt
