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

#include "topo2d/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace topo2d::oracle {

namespace {

// Counts components of cells equal to `value` in a w*h grid by iterative
// flood fill.
int count_cells(const std::vector<std::uint8_t>& cells, int w, int h, std::uint8_t value,
                Connectivity c) {
  std::vector<std::uint8_t> seen(cells.size(), 0);
  std::vector<int> stack;
  const bool eight = c == Connectivity::Eight;
  int count = 0;
  for (int start = 0; start < w * h; ++start) {
    if (cells[start] != value || seen[start]) continue;
    ++count;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      const int cx = cur % w;
      const int cy = cur / w;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (!eight && dx != 0 && dy != 0) continue;
          const int nx = cx + dx;
          const int ny = cy + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const int next = ny * w + nx;
          if (cells[next] == value && !seen[next]) {
            seen[next] = 1;
            stack.push_back(next);
          }
        }
      }
    }
  }
  return count;
}

std::vector<std::uint8_t> padded_cells(const BinaryImage& img, int padding) {
  const int w = img.width() + 2 * padding;
  const int h = img.height() + 2 * padding;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w) * h, 0);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      cells[(y + padding) * w + (x + padding)] = img.at(x, y) ? 1 : 0;
    }
  }
  return cells;
}

}  // namespace

int count_black_components(const BinaryImage& img, Connectivity n) {
  return count_cells(padded_cells(img, 0), img.width(), img.height(), 1, n);
}

int count_white_components(const BinaryImage& img, Connectivity n_bar, int padding) {
  if (padding < 1) throw std::invalid_argument("count_white_components: padding must be >= 1");
  return count_cells(padded_cells(img, padding), img.width() + 2 * padding,
                     img.height() + 2 * padding, 0, n_bar);
}

bool is_simple_global(const BinaryImage& img, Point p, ConnPair pair) {
  if (!img.at(p)) throw std::invalid_argument("is_simple_global: point is not black");
  BinaryImage after = img;
  after.set(p, false);
  return count_black_components(img, pair.n()) == count_black_components(after, pair.n()) &&
         count_white_components(img, pair.n_bar()) == count_white_components(after, pair.n_bar());
}

}  // namespace topo2d::oracle
