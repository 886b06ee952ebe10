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

#include "symgraph/raster.h"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdlib>
#include <cstring>

#include "symgraph/error.h"

namespace symgraph {

namespace {

// Rounds p / q half away from zero for p >= 0, q > 0.
long RoundDivNonNegative(long p, long q) { return (2 * p + q) / (2 * q); }

int RoundHalfAway(double v) { return static_cast<int>(std::lround(v)); }

}  // namespace

RasterImage RasterImage::Blank(int width, int height) {
  if (width <= 0 || height <= 0) ThrowInvalidArgument("empty image size");
  RasterImage image;
  image.width = width;
  image.height = height;
  image.pixels.assign(static_cast<std::size_t>(width) * height, kWhite);
  return image;
}

int RasterImage::CountInk() const {
  return static_cast<int>(std::count(pixels.begin(), pixels.end(), kBlack));
}

Point ViewTransform::Map(Point p) const {
  return {pixel_center.x + scale * (p.x - layout_center.x),
          pixel_center.y - scale * (p.y - layout_center.y)};
}

PixelPoint ViewTransform::MapToPixel(Point p) const {
  const Point q = Map(p);
  return {RoundHalfAway(q.x), RoundHalfAway(q.y)};
}

ViewTransform FitView(std::span<const Point> positions, int width, int height,
                      int margin) {
  if (positions.empty()) ThrowInvalidArgument("cannot fit an empty layout");
  if (width <= 2 * margin || height <= 2 * margin) {
    ThrowInvalidArgument("margin leaves no drawing area");
  }
  const BoundingBox box = BoundsOf(positions);
  const double usable_w = width - 2.0 * margin;
  const double usable_h = height - 2.0 * margin;
  double scale = 0.0;
  if (box.width() > 0 && box.height() > 0) {
    scale = std::min(usable_w / box.width(), usable_h / box.height());
  } else if (box.width() > 0) {
    scale = usable_w / box.width();
  } else if (box.height() > 0) {
    scale = usable_h / box.height();
  } else {
    ThrowInvalidArgument("degenerate layout: all vertices coincide");
  }
  ViewTransform view;
  view.scale = scale;
  view.layout_center = box.center();
  view.pixel_center = {width / 2.0, height / 2.0};
  view.width = width;
  view.height = height;
  view.margin = margin;
  return view;
}

ViewTransform FitView(const Layout& layout, int width, int height,
                      int margin) {
  return FitView(layout.positions, width, height, margin);
}

std::vector<PixelPoint> DigitalLine(PixelPoint a, PixelPoint b) {
  if (b.y < a.y || (b.y == a.y && b.x < a.x)) std::swap(a, b);
  const long dx = b.x - a.x;
  const long dy = b.y - a.y;  // >= 0
  const long adx = std::labs(dx);
  const int sx = dx < 0 ? -1 : 1;
  std::vector<PixelPoint> out;
  if (adx >= dy) {
    out.reserve(adx + 1);
    for (long t = 0; t <= adx; ++t) {
      const long off = adx == 0 ? 0 : RoundDivNonNegative(t * dy, adx);
      out.push_back({a.x + sx * static_cast<int>(t),
                     a.y + static_cast<int>(off)});
    }
  } else {
    out.reserve(dy + 1);
    for (long t = 0; t <= dy; ++t) {
      const long off = RoundDivNonNegative(t * adx, dy);
      out.push_back({a.x + sx * static_cast<int>(off),
                     a.y + static_cast<int>(t)});
    }
  }
  return out;
}

RasterImage Rasterize(const Layout& layout, const ViewTransform& view) {
  if (static_cast<int>(layout.positions.size()) != layout.num_vertices()) {
    ThrowInvalidArgument("position count does not match vertex count");
  }
  RasterImage image = RasterImage::Blank(view.width, view.height);
  std::vector<PixelPoint> centers;
  centers.reserve(layout.positions.size());
  for (const Point& p : layout.positions) centers.push_back(view.MapToPixel(p));

  for (const Edge& e : layout.graph.edges()) {
    for (const PixelPoint& q : DigitalLine(centers[e.u], centers[e.v])) {
      if (image.Contains(q.x, q.y)) image.at(q.x, q.y) = kBlack;
    }
  }
  for (const PixelPoint& c : centers) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (image.Contains(c.x + dx, c.y + dy)) {
          image.at(c.x + dx, c.y + dy) = kBlack;
        }
      }
    }
  }
  return image;
}

RasterImage Rasterize(const Layout& layout) {
  return Rasterize(layout, FitView(layout));
}

int InkUpperBound(const Layout& layout, const ViewTransform& view) {
  int bound = 9 * layout.num_vertices();
  for (const Edge& e : layout.graph.edges()) {
    const PixelPoint a = view.MapToPixel(layout.positions[e.u]);
    const PixelPoint b = view.MapToPixel(layout.positions[e.v]);
    bound += std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)) + 1;
  }
  return bound;
}

namespace {

void WriteToVector(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void FlushNothing(png_structp) {}

struct ReadCursor {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void ReadFromSpan(png_structp png, png_bytep data, png_size_t length) {
  auto* cursor = static_cast<ReadCursor*>(png_get_io_ptr(png));
  if (cursor->offset + length > cursor->bytes.size()) {
    png_error(png, "truncated PNG stream");
  }
  std::memcpy(data, cursor->bytes.data() + cursor->offset, length);
  cursor->offset += length;
}

}  // namespace

std::vector<std::uint8_t> EncodePng(const RasterImage& image) {
  if (image.pixels.size() !=
      static_cast<std::size_t>(image.width) * image.height) {
    ThrowInvalidArgument("pixel buffer does not match image size");
  }
  std::vector<std::uint8_t> out;
  std::vector<png_bytep> rows(image.height);
  for (int y = 0; y < image.height; ++y) {
    rows[y] = const_cast<png_bytep>(image.pixels.data() +
                                    static_cast<std::size_t>(y) * image.width);
  }
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw Error(ErrorCode::kIo, "png_create_write_struct");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::kIo, "PNG encoding failed");
  }
  png_set_write_fn(png, &out, WriteToVector, FlushNothing);
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 6);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

RasterImage DecodePng(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    throw Error(ErrorCode::kParse, "not a PNG stream");
  }
  ReadCursor cursor{bytes, 0};
  RasterImage image;
  std::vector<png_bytep> rows;
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw Error(ErrorCode::kIo, "png_create_read_struct");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(ErrorCode::kParse, "PNG decoding failed");
  }
  png_set_read_fn(png, &cursor, ReadFromSpan);
  png_read_info(png, info);
  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (color_type & PNG_COLOR_MASK_COLOR || color_type == PNG_COLOR_TYPE_PALETTE) {
    png_set_rgb_to_gray_fixed(png, 1, -1, -1);
  }
  png_read_update_info(png, info);
  image.width = static_cast<int>(png_get_image_width(png, info));
  image.height = static_cast<int>(png_get_image_height(png, info));
  image.pixels.assign(static_cast<std::size_t>(image.width) * image.height, 0);
  rows.resize(image.height);
  for (int y = 0; y < image.height; ++y) {
    rows[y] = image.pixels.data() + static_cast<std::size_t>(y) * image.width;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

}  // namespace symgraph
