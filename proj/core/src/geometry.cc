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

#include "symgraph/geometry.h"

#include <algorithm>
#include <limits>

#include "symgraph/error.h"

namespace symgraph {

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

Axis CanonicalAxis(double theta, double rho) {
  double t = std::fmod(theta, 2 * kPi);
  if (t < 0) t += 2 * kPi;
  if (t >= kPi) {
    t -= kPi;
    rho = -rho;
  }
  if (t >= kPi) {  // t was 2 pi after rounding, which is direction 0
    t = 0.0;
    rho = -rho;
  }
  return {t, rho};
}

Axis AxisThrough(Point p, Point direction) {
  const double theta = std::atan2(direction.y, direction.x);
  const Point normal{-std::sin(theta), std::cos(theta)};
  return CanonicalAxis(theta, Dot(normal, p));
}

std::optional<Axis> LineThroughPoints(Point a, Point b) {
  if (a == b) return std::nullopt;
  return AxisThrough(a, b - a);
}

std::optional<Axis> PerpendicularBisector(Point a, Point b) {
  if (a == b) return std::nullopt;
  const Point d = b - a;
  return AxisThrough((a + b) * 0.5, Point{-d.y, d.x});
}

Point Reflect(Point p, const Axis& axis) {
  const Point n = axis.Normal();
  const double signed_distance = Dot(n, p) - axis.rho;
  return p - n * (2.0 * signed_distance);
}

Point RotateAbout(Point p, Point center, double angle_rad) {
  const double c = std::cos(angle_rad);
  const double s = std::sin(angle_rad);
  const Point d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

double AxisAngleDistance(double theta_a, double theta_b) {
  double d = std::fmod(std::abs(theta_a - theta_b), kPi);
  return std::min(d, kPi - d);
}

BoundingBox BoundsOf(std::span<const Point> points) {
  if (points.empty()) ThrowInvalidArgument("bounding box of no points");
  BoundingBox box{points[0], points[0]};
  for (const Point& p : points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

Point Centroid(std::span<const Point> points) {
  if (points.empty()) ThrowInvalidArgument("centroid of no points");
  Point sum;
  for (const Point& p : points) sum = sum + p;
  return sum * (1.0 / static_cast<double>(points.size()));
}

double Diameter(std::span<const Point> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, Distance(points[i], points[j]));
    }
  }
  return best;
}

}  // namespace symgraph
