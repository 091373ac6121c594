// Copyright 2026 The topo2d Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace topo2d {

/// A point of Z^2. x is the column, y is the row; y grows downward.
struct Point {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;

  // Row-major: compare rows first.
  friend constexpr std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

enum class Connectivity : std::uint8_t { Four = 4, Eight = 8 };

constexpr Connectivity dual(Connectivity c) {
  return c == Connectivity::Four ? Connectivity::Eight : Connectivity::Four;
}

constexpr int as_int(Connectivity c) { return static_cast<int>(c); }

/// Jordan pair (n, n_bar): connectivity of the object and of its complement.
/// Only (4,8) and (8,4) can be constructed.
class ConnPair {
 public:
  constexpr explicit ConnPair(Connectivity object) : n_(object) {}

  static constexpr ConnPair four_eight() { return ConnPair(Connectivity::Four); }
  static constexpr ConnPair eight_four() { return ConnPair(Connectivity::Eight); }

  constexpr Connectivity n() const { return n_; }
  constexpr Connectivity n_bar() const { return dual(n_); }

  friend constexpr bool operator==(const ConnPair&, const ConnPair&) = default;

 private:
  Connectivity n_;
};

inline constexpr ConnPair kBothPairs[] = {ConnPair::four_eight(), ConnPair::eight_four()};

/// Finite rectangular bitmap. Black (true) pixels form the object X; every
/// query outside [0,width) x [0,height) reports white.
class BinaryImage {
 public:
  BinaryImage() = default;
  /// Throws std::invalid_argument unless width and height are positive.
  BinaryImage(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  bool contains(Point p) const {
    return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_;
  }

  bool at(Point p) const { return contains(p) && bits_[index(p)] != 0; }
  bool at(int x, int y) const { return at(Point{x, y}); }

  /// Throws std::out_of_range for points outside the image.
  void set(Point p, bool black);
  void set(int x, int y, bool black) { set(Point{x, y}, black); }

  /// Row-major 0/1 bytes, width*height of them.
  std::span<const std::uint8_t> bits() const { return bits_; }

  std::vector<Point> black_points() const;
  std::size_t black_count() const;

  void invert();

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(Point p) const {
    return static_cast<std::size_t>(p.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(p.x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

bool are_adjacent(Point p, Point q, Connectivity c);

/// N_c*(p): the 4 or 8 neighbours of p, excluding p, in row-major order.
std::vector<Point> neighbors(Point p, Connectivity c);

using Component = std::vector<Point>;

/// Partitions a finite point set into maximal c-connected subsets. Duplicates
/// in the input are ignored. Each component is sorted row-major and the
/// components are ordered by their smallest member.
std::vector<Component> connected_components(std::span<const Point> points, Connectivity c);

/// Number of c-components of `points` having at least one member c-adjacent
/// to x. x is expected not to belong to `points`.
int count_components_adjacent_to(std::span<const Point> points, Point x, Connectivity c);

}  // namespace topo2d
