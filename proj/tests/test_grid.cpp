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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/brute_topo.hpp"
#include "topo2d/grid.hpp"

using namespace topo2d;

namespace {

using Points = std::vector<Point>;

}  // namespace

TEST(Grid, NeighborsFour) {
  EXPECT_EQ(neighbors({0, 0}, Connectivity::Four), (Points{{0, -1}, {-1, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(neighbors({5, 7}, Connectivity::Four), (Points{{5, 6}, {4, 7}, {6, 7}, {5, 8}}));
}

TEST(Grid, NeighborsEight) {
  const Points expected{{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
  EXPECT_EQ(neighbors({0, 0}, Connectivity::Eight), expected);
}

TEST(Grid, DualConnectivity) {
  EXPECT_EQ(dual(Connectivity::Four), Connectivity::Eight);
  EXPECT_EQ(dual(Connectivity::Eight), Connectivity::Four);
  EXPECT_EQ(ConnPair::four_eight().n_bar(), Connectivity::Eight);
  EXPECT_EQ(ConnPair::eight_four().n_bar(), Connectivity::Four);
}

TEST(Grid, AdjacencyIsSymmetricAndFourImpliesEight) {
  for (int dx = -2; dx <= 2; ++dx) {
    for (int dy = -2; dy <= 2; ++dy) {
      const Point p{3, 4};
      const Point q{3 + dx, 4 + dy};
      for (Connectivity c : {Connectivity::Four, Connectivity::Eight}) {
        const auto np = neighbors(p, c);
        const auto nq = neighbors(q, c);
        const bool q_in_p = std::find(np.begin(), np.end(), q) != np.end();
        const bool p_in_q = std::find(nq.begin(), nq.end(), p) != nq.end();
        EXPECT_EQ(q_in_p, p_in_q);
      }
      if (are_adjacent(p, q, Connectivity::Four)) {
        EXPECT_TRUE(are_adjacent(p, q, Connectivity::Eight));
      }
    }
  }
}

TEST(Grid, ComponentsDiagonalPair) {
  const Points pts{{0, 0}, {1, 1}};
  EXPECT_EQ(connected_components(pts, Connectivity::Four),
            (std::vector<Component>{{{0, 0}}, {{1, 1}}}));
  EXPECT_EQ(connected_components(pts, Connectivity::Eight),
            (std::vector<Component>{{{0, 0}, {1, 1}}}));
}

TEST(Grid, ComponentsGap) {
  const Points pts{{0, 0}, {1, 0}, {3, 0}};
  EXPECT_EQ(connected_components(pts, Connectivity::Four),
            (std::vector<Component>{{{0, 0}, {1, 0}}, {{3, 0}}}));
}

TEST(Grid, ComponentsEmptyAndDuplicates) {
  EXPECT_TRUE(connected_components({}, Connectivity::Eight).empty());
  const Points dup{{2, 2}, {2, 2}};
  EXPECT_EQ(connected_components(dup, Connectivity::Four), (std::vector<Component>{{{2, 2}}}));
}

TEST(Grid, CountAdjacentComponents) {
  const Points diag{{-1, -1}};
  EXPECT_EQ(count_components_adjacent_to(diag, {0, 0}, Connectivity::Four), 0);
  EXPECT_EQ(count_components_adjacent_to(diag, {0, 0}, Connectivity::Eight), 1);
  const Points tee{{0, -1}, {-1, 0}, {1, 0}};
  EXPECT_EQ(count_components_adjacent_to(tee, {0, 0}, Connectivity::Four), 3);
}

TEST(Grid, CountAdjacentRejectsMember) {
  const Points pts{{0, 0}};
  EXPECT_THROW(count_components_adjacent_to(pts, {0, 0}, Connectivity::Four),
               std::invalid_argument);
}

TEST(Grid, FullRingIsOneFourComponent) {
  const auto ring = neighbors({0, 0}, Connectivity::Eight);
  EXPECT_EQ(count_components_adjacent_to(ring, {0, 0}, Connectivity::Four), 1);
}

TEST(Grid, BinaryImageOutsideIsWhite) {
  BinaryImage img(2, 2);
  img.set(1, 1, true);
  EXPECT_TRUE(img.at(1, 1));
  EXPECT_FALSE(img.at(-1, 0));
  EXPECT_FALSE(img.at(2, 1));
  EXPECT_FALSE(img.at(0, 5));
  EXPECT_THROW(img.set(2, 0, true), std::out_of_range);
  EXPECT_THROW(BinaryImage(0, 3), std::invalid_argument);
}

// Random point clouds: partition, canonical order, order independence,
// non-adjacency between components, and 8-components as unions of
// 4-components.
TEST(GridProperty, ComponentsOnRandomSets) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryImage img = testkit::random_image(rng, 12, 12, 0.45);
    Points pts = img.black_points();
    for (Connectivity c : {Connectivity::Four, Connectivity::Eight}) {
      const auto comps = connected_components(pts, c);

      Points shuffled = pts;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(connected_components(shuffled, c), comps);

      Points merged;
      for (const auto& comp : comps) {
        EXPECT_TRUE(std::is_sorted(comp.begin(), comp.end()));
        merged.insert(merged.end(), comp.begin(), comp.end());
      }
      for (std::size_t i = 1; i < comps.size(); ++i) {
        EXPECT_LT(comps[i - 1].front(), comps[i].front());
      }
      std::sort(merged.begin(), merged.end());
      EXPECT_EQ(merged, pts);

      for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
          for (Point a : comps[i]) {
            for (Point b : comps[j]) ASSERT_FALSE(are_adjacent(a, b, c));
          }
        }
      }
    }

    const auto four = connected_components(pts, Connectivity::Four);
    const auto eight = connected_components(pts, Connectivity::Eight);
    EXPECT_GE(four.size(), eight.size());
    for (const auto& f : four) {
      const auto owner = std::find_if(eight.begin(), eight.end(), [&](const Component& e) {
        return std::binary_search(e.begin(), e.end(), f.front());
      });
      ASSERT_NE(owner, eight.end());
      for (Point p : f) EXPECT_TRUE(std::binary_search(owner->begin(), owner->end(), p));
    }
  }
}

TEST(GridProperty, AdjacentCountBounded) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryImage img = testkit::random_image(rng, 7, 7, 0.5);
    const Point x{3, 3};
    img.set(x, false);
    const auto pts = img.black_points();
    for (Connectivity c : {Connectivity::Four, Connectivity::Eight}) {
      const int k = count_components_adjacent_to(pts, x, c);
      EXPECT_LE(k, 4);
      EXPECT_LE(static_cast<std::size_t>(k), connected_components(pts, c).size());
    }
  }
}
