// Copyright 2026 The SymGraph Authors
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

// Binary rendering of layouts: 1-px digital lines for edges, 3x3 blocks for
// vertices, black ink on white, 200x200 by default. Output is bit-exact for a
// given layout and view.

#ifndef SYMGRAPH_RASTER_H_
#define SYMGRAPH_RASTER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "symgraph/geometry.h"
#include "symgraph/layout.h"

namespace symgraph {

inline constexpr int kImageSize = 200;
inline constexpr int kViewMargin = 6;
inline constexpr std::uint8_t kWhite = 255;
inline constexpr std::uint8_t kBlack = 0;

struct RasterImage {
  int width = kImageSize;
  int height = kImageSize;
  std::vector<std::uint8_t> pixels;  // row-major

  static RasterImage Blank(int width = kImageSize, int height = kImageSize);

  std::uint8_t at(int x, int y) const { return pixels[y * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[y * width + x]; }
  bool Contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width && y < height;
  }
  int CountInk() const;

  bool operator==(const RasterImage&) const = default;
};

struct PixelPoint {
  int x = 0;
  int y = 0;
  bool operator==(const PixelPoint&) const = default;
};

// Maps layout units to pixel coordinates: x to the right, y upward in layout
// space and downward in the image.
struct ViewTransform {
  double scale = 1.0;     // pixels per unit
  Point layout_center;    // maps to pixel_center
  Point pixel_center;
  int width = kImageSize;
  int height = kImageSize;
  int margin = kViewMargin;

  Point Map(Point p) const;
  // Rounded half away from zero.
  PixelPoint MapToPixel(Point p) const;
};

// Uniform scale that fits the bounding box into [margin, size - margin] on
// both axes, centered. Degenerate (single point) layouts are
// invalid-argument.
ViewTransform FitView(std::span<const Point> positions, int width = kImageSize,
                      int height = kImageSize, int margin = kViewMargin);
ViewTransform FitView(const Layout& layout, int width = kImageSize,
                      int height = kImageSize, int margin = kViewMargin);

// Integer digital line between two pixel centers, both ends included. The
// minor coordinate is the exact rational interpolation rounded half away from
// zero, always measured from the endpoint with the smaller y (then smaller
// x), so the pixel set does not depend on endpoint order and mirrors exactly
// under a horizontal flip.
std::vector<PixelPoint> DigitalLine(PixelPoint a, PixelPoint b);

// Edges first, then the 3x3 vertex blocks over them.
RasterImage Rasterize(const Layout& layout, const ViewTransform& view);
RasterImage Rasterize(const Layout& layout);

// Lossless 8-bit grayscale PNG.
std::vector<std::uint8_t> EncodePng(const RasterImage& image);
RasterImage DecodePng(std::span<const std::uint8_t> bytes);

// Upper bound on black pixels: 9 per vertex plus the pixel length of each
// edge's digital line.
int InkUpperBound(const Layout& layout, const ViewTransform& view);

}  // namespace symgraph

#endif  // SYMGRAPH_RASTER_H_
