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

#include "topo2d/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace topo2d {

BinaryImage::BinaryImage(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("BinaryImage: width and height must be positive");
  }
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

void BinaryImage::set(Point p, bool black) {
  if (!contains(p)) throw std::out_of_range("BinaryImage::set: point outside image");
  bits_[index(p)] = black ? 1 : 0;
}

std::vector<Point> BinaryImage::black_points() const {
  std::vector<Point> out;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (bits_[index({x, y})]) out.push_back({x, y});
    }
  }
  return out;
}

std::size_t BinaryImage::black_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

void BinaryImage::invert() {
  for (auto& b : bits_) b ^= 1;
}

bool are_adjacent(Point p, Point q, Connectivity c) {
  const int dx = std::abs(p.x - q.x);
  const int dy = std::abs(p.y - q.y);
  if (dx == 0 && dy == 0) return false;
  if (c == Connectivity::Four) return dx + dy == 1;
  return dx <= 1 && dy <= 1;
}

std::vector<Point> neighbors(Point p, Connectivity c) {
  std::vector<Point> out;
  out.reserve(8);
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const Point q{p.x + dx, p.y + dy};
      if (are_adjacent(p, q, c)) out.push_back(q);
    }
  }
  return out;
}

namespace {

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    const auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x));
    const auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
    return std::hash<std::uint64_t>{}((uy << 32) | ux);
  }
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

std::vector<Component> connected_components(std::span<const Point> points, Connectivity c) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::unordered_map<Point, std::size_t, PointHash> index;
  index.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);

  DisjointSets sets(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (const Point q : neighbors(sorted[i], c)) {
      if (auto it = index.find(q); it != index.end()) sets.unite(i, it->second);
    }
  }

  // `sorted` is row-major, so the first time a root is seen it belongs to the
  // component's smallest member; appending in that order keeps both the
  // members and the components canonically ordered.
  std::vector<Component> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::size_t root = sets.find(i);
    auto [it, inserted] = slot.emplace(root, out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(sorted[i]);
  }
  return out;
}

int count_components_adjacent_to(std::span<const Point> points, Point x, Connectivity c) {
  if (std::find(points.begin(), points.end(), x) != points.end()) {
    throw std::invalid_argument("count_components_adjacent_to: x belongs to the point set");
  }
  int count = 0;
  for (const Component& comp : connected_components(points, c)) {
    const bool touches = std::any_of(comp.begin(), comp.end(),
                                     [&](Point p) { return are_adjacent(p, x, c); });
    if (touches) ++count;
  }
  return count;
}

}  // namespace topo2d
