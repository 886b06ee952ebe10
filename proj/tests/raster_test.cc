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


#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "symgraph/error.h"
#include "symgraph/raster.h"
#include "symgraph/sample.h"

namespace symgraph {
namespace {

using PixelSet = std::set<std::pair<int, int>>;

PixelSet Ink(const RasterImage& image) {
  PixelSet out;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      if (image.at(x, y) == kBlack) out.insert({x, y});
    }
  }
  return out;
}

PixelSet Block(int cx, int cy) {
  PixelSet out;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) out.insert({cx + dx, cy + dy});
  }
  return out;
}

Layout Segment(Point a, Point b) {
  Layout l;
  l.graph = Graph(2);
  l.graph.AddEdge(0, 1);
  l.positions = {a, b};
  return l;
}

TEST(RasterTest, FitUnitSquare) {
  const std::vector<Point> square = {{-1, -1}, {1, 1}};
  const ViewTransform v = FitView(square);
  EXPECT_DOUBLE_EQ(v.scale, 94.0);
  EXPECT_EQ(v.MapToPixel({0, 0}), (PixelPoint{100, 100}));
  EXPECT_EQ(v.MapToPixel({-1, 1}), (PixelPoint{6, 6}));
  EXPECT_EQ(v.MapToPixel({1, -1}), (PixelPoint{194, 194}));
}

TEST(RasterTest, SingleVertexIsDegenerate) {
  const std::vector<Point> one = {{0.3, 0.3}};
  try {
    FitView(one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(RasterTest, VertexBlock) {
  Layout l;
  l.graph = Graph(1);
  l.positions = {{0, 0}};
  ViewTransform v;
  v.scale = 1;
  v.pixel_center = {100, 100};
  EXPECT_EQ(Ink(Rasterize(l, v)), Block(100, 100));
}

TEST(RasterTest, HorizontalEdgeFixture) {
  // Two vertices 100 px apart on row 100 after fitting: 50..150 inclusive.
  const Layout l = Segment({-50, 0}, {50, 0});
  ViewTransform v;
  v.scale = 1;
  v.pixel_center = {100, 100};
  PixelSet expected = Block(50, 100);
  const PixelSet right = Block(150, 100);
  expected.insert(right.begin(), right.end());
  for (int x = 50; x <= 150; ++x) expected.insert({x, 100});
  EXPECT_EQ(Ink(Rasterize(l, v)), expected);
}

TEST(RasterTest, FittedTwoVertexFixture) {
  // Fitting a horizontal segment spans the full drawing width.
  const RasterImage image = Rasterize(Segment({-3, 2}, {5, 2}));
  PixelSet expected = Block(6, 100);
  const PixelSet right = Block(194, 100);
  expected.insert(right.begin(), right.end());
  for (int x = 6; x <= 194; ++x) expected.insert({x, 100});
  EXPECT_EQ(Ink(image), expected);
}

TEST(RasterTest, CenteredMirrorPairFixture) {
  // A vertical segment mirrored about the vertical axis.
  Layout l;
  l.graph = Graph(4);
  l.graph.AddEdge(0, 1);
  l.graph.AddEdge(2, 3);
  l.positions = {{0.5, -1}, {0.5, 1}, {-0.5, -1}, {-0.5, 1}};
  const RasterImage image = Rasterize(l);
  // Height 2 limits the scale to 94; x = +-0.5 maps to 100 +- 47.
  PixelSet expected;
  for (int x : {53, 147}) {
    for (int y = 6; y <= 194; ++y) expected.insert({x, y});
    for (int y : {6, 194}) {
      const PixelSet b = Block(x, y);
      expected.insert(b.begin(), b.end());
    }
  }
  EXPECT_EQ(Ink(image), expected);
}

TEST(RasterTest, DigitalLineEndpointsAndSymmetry) {
  for (int ax = 0; ax < 200; ax += 37) {
    for (int ay = 0; ay < 200; ay += 41) {
      for (int bx = 3; bx < 200; bx += 29) {
        for (int by = 5; by < 200; by += 31) {
          const PixelPoint a{ax, ay}, b{bx, by};
          const auto line = DigitalLine(a, b);
          const auto reverse = DigitalLine(b, a);
          EXPECT_EQ(line, reverse);
          EXPECT_EQ(static_cast<int>(line.size()),
                    std::max(std::abs(ax - bx), std::abs(ay - by)) + 1);
          // Mirror about x = 100 maps the line onto the mirrored line.
          const auto mirrored = DigitalLine({200 - ax, ay}, {200 - bx, by});
          std::set<std::pair<int, int>> s1, s2;
          for (auto p : line) s1.insert({200 - p.x, p.y});
          for (auto p : mirrored) s2.insert({p.x, p.y});
          EXPECT_EQ(s1, s2);
        }
      }
    }
  }
}

TEST(RasterTest, MirrorSymmetricLayoutGivesMirrorImage) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Sample s = GenerateSample(LayoutClass::kVerticalLarge, seed, 0);
    const RasterImage image = Rasterize(s.layout);
    for (int y = 0; y < 200; ++y) {
      for (int x = 1; x < 200; ++x) {
        ASSERT_EQ(image.at(x, y), image.at(200 - x, y)) << seed;
      }
    }
  }
}

TEST(RasterTest, PngRoundTrip) {
  const RasterImage white = RasterImage::Blank();
  const RasterImage decoded = DecodePng(EncodePng(white));
  EXPECT_EQ(decoded.width, 200);
  EXPECT_EQ(decoded.height, 200);
  EXPECT_EQ(decoded.pixels.size(), 40000u);
  for (auto v : decoded.pixels) ASSERT_EQ(v, 255);

  const Sample s = GenerateSample(LayoutClass::kSmallSym, 5, 1);
  const RasterImage image = Rasterize(s.layout);
  EXPECT_EQ(DecodePng(EncodePng(image)), image);
  EXPECT_EQ(EncodePng(image), EncodePng(image));
}

TEST(RasterTest, DecodeRejectsGarbage) {
  const std::vector<std::uint8_t> junk = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_THROW(DecodePng(junk), Error);
  auto png = EncodePng(RasterImage::Blank());
  png.resize(png.size() / 2);
  EXPECT_THROW(DecodePng(png), Error);
}

TEST(RasterTest, InkWithinBound) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Sample s = GenerateSample(LayoutClass::kRotationalLarge, seed, 0);
    const ViewTransform v = FitView(s.layout);
    const int ink = Rasterize(s.layout, v).CountInk();
    EXPECT_GE(ink, 9);
    EXPECT_LE(ink, InkUpperBound(s.layout, v));
  }
}

}  // namespace
}  // namespace symgraph
