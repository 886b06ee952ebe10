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

#ifndef SYMGRAPH_GEOMETRY_H_
#define SYMGRAPH_GEOMETRY_H_

#include <cmath>
#include <numbers>
#include <optional>
#include <span>

namespace symgraph {

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Point&) const = default;
};

inline double Dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double Norm(Point p) { return std::hypot(p.x, p.y); }
inline double Distance(Point a, Point b) { return Norm(a - b); }

inline double DegToRad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double RadToDeg(double rad) { return rad * 180.0 / std::numbers::pi; }

// A line in the plane. `theta` is the direction of the line measured from
// the positive x-axis, in [0, pi); a vertical line has theta = pi/2. The line
// is the set of points p with Dot(Normal(), p) == rho, where
// Normal() = (-sin theta, cos theta).
struct Axis {
  double theta = 0.0;
  double rho = 0.0;

  Point Direction() const { return {std::cos(theta), std::sin(theta)}; }
  Point Normal() const { return {-std::sin(theta), std::cos(theta)}; }
};

// Brings theta into [0, pi), flipping the sign of rho when the direction is
// reversed.
Axis CanonicalAxis(double theta, double rho);

Axis AxisThrough(Point p, Point direction);
// Line through a and b; nullopt when they coincide.
std::optional<Axis> LineThroughPoints(Point a, Point b);
// Perpendicular bisector of a and b; nullopt when they coincide.
std::optional<Axis> PerpendicularBisector(Point a, Point b);

Point Reflect(Point p, const Axis& axis);
Point RotateAbout(Point p, Point center, double angle_rad);

// Unsigned angle between two axis directions, in [0, pi/2].
double AxisAngleDistance(double theta_a, double theta_b);

struct BoundingBox {
  Point min;
  Point max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diagonal() const { return std::hypot(width(), height()); }
  Point center() const { return (min + max) * 0.5; }
};

BoundingBox BoundsOf(std::span<const Point> points);
Point Centroid(std::span<const Point> points);
// Largest pairwise distance; invariant under rotation, unlike the bounding
// box diagonal.
double Diameter(std::span<const Point> points);

}  // namespace symgraph

#endif  // SYMGRAPH_GEOMETRY_H_
