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

#include <cstdlib>
#include <random>

#include "support/brute_topo.hpp"
#include "topo2d/oracle.hpp"
#include "topo2d/topo.hpp"

using namespace topo2d;
using namespace topo2d::oracle;

namespace {

constexpr auto kFour = Connectivity::Four;
constexpr auto kEight = Connectivity::Eight;

BinaryImage hollow_ring5() {
  return testkit::image_from_rows({"#####", "#...#", "#...#", "#...#", "#####"});
}

// Second route for white counts: grid union-find over the white points of a
// canvas padded by one ring.
int white_components_via_grid(const BinaryImage& img, Connectivity c) {
  std::vector<Point> whites;
  for (int y = -1; y <= img.height(); ++y) {
    for (int x = -1; x <= img.width(); ++x) {
      if (!img.at(x, y)) whites.push_back({x, y});
    }
  }
  return static_cast<int>(connected_components(whites, c).size());
}

}  // namespace

TEST(Oracle, BlackComponents) {
  BinaryImage diag(2, 2);
  diag.set(0, 0, true);
  diag.set(1, 1, true);
  EXPECT_EQ(count_black_components(diag, kFour), 2);
  EXPECT_EQ(count_black_components(diag, kEight), 1);
  EXPECT_EQ(count_black_components(BinaryImage(4, 4), kFour), 0);
  EXPECT_EQ(count_black_components(hollow_ring5(), kFour), 1);
}

TEST(Oracle, WhiteComponents) {
  BinaryImage full(3, 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 3; ++x) full.set(x, y, true);
  EXPECT_EQ(count_white_components(full, kFour), 1);
  EXPECT_EQ(count_white_components(full, kEight), 1);
  EXPECT_EQ(count_white_components(BinaryImage(3, 3), kFour), 1);

  const BinaryImage ring = hollow_ring5();
  ASSERT_EQ(white_components_via_grid(ring, kFour), 2);
  EXPECT_EQ(count_white_components(ring, kFour), 2);
  EXPECT_EQ(count_white_components(ring, kEight), white_components_via_grid(ring, kEight));
}

TEST(Oracle, DiagonalHoleDependsOnConnectivity) {
  // A white pixel enclosed by a ring whose corners are open: 4-connected
  // whites see a hole, 8-connected whites leak through the corners.
  const BinaryImage img = testkit::image_from_rows({".#.", "#.#", ".#."});
  EXPECT_EQ(count_white_components(img, kFour), 2);
  EXPECT_EQ(count_white_components(img, kEight), 1);
}

TEST(Oracle, SimpleGlobalExamples) {
  BinaryImage single(1, 1);
  single.set(0, 0, true);
  for (ConnPair pair : kBothPairs) EXPECT_FALSE(is_simple_global(single, {0, 0}, pair));

  BinaryImage domino(2, 1);
  domino.set(0, 0, true);
  domino.set(1, 0, true);
  EXPECT_TRUE(is_simple_global(domino, {0, 0}, ConnPair::four_eight()));

  // N, W, E black around the centre of a 5x5 canvas.
  const BinaryImage tee = testkit::image_from_rows({".....", "..#..", ".###.", ".....", "....."});
  EXPECT_FALSE(is_simple_global(tee, {2, 2}, ConnPair::four_eight()));
  EXPECT_TRUE(is_simple_global(tee, {2, 2}, ConnPair::eight_four()));
}

TEST(Oracle, SimpleGlobalRejectsWhitePoint) {
  EXPECT_THROW(is_simple_global(BinaryImage(2, 2), {0, 0}, ConnPair::four_eight()),
               std::invalid_argument);
  EXPECT_THROW(is_simple_global(BinaryImage(2, 2), {5, 5}, ConnPair::four_eight()),
               std::invalid_argument);
}

TEST(Oracle, RejectsZeroPadding) {
  EXPECT_THROW(count_white_components(BinaryImage(2, 2), kFour, 0), std::invalid_argument);
}

TEST(OracleProperty, PaddingStability) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryImage img = testkit::random_image(rng, 10, 9);
    for (Connectivity c : {kFour, kEight}) {
      EXPECT_EQ(count_white_components(img, c, 1), count_white_components(img, c, 2));
      EXPECT_EQ(count_white_components(img, c, 1), white_components_via_grid(img, c));
    }
  }
}

TEST(OracleProperty, DeletionChangesCountsByAtMostThree) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const BinaryImage img = testkit::random_image(rng, 16, 16);
    for (ConnPair pair : kBothPairs) {
      const int black = count_black_components(img, pair.n());
      const int white = count_white_components(img, pair.n_bar());
      for (Point p : img.black_points()) {
        BinaryImage after = img;
        after.set(p, false);
        EXPECT_LE(std::abs(count_black_components(after, pair.n()) - black), 3);
        EXPECT_LE(std::abs(count_white_components(after, pair.n_bar()) - white), 3);
      }
    }
  }
}

TEST(OracleProperty, LocalTestAgreesOnRandomImages) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const BinaryImage img = testkit::random_image(rng, 16, 16);
    for (ConnPair pair : kBothPairs) {
      for (Point p : img.black_points()) {
        ASSERT_EQ(is_simple(config_of(img, p), pair), is_simple_global(img, p, pair))
            << "trial " << trial << " at " << p.x << "," << p.y;
      }
    }
  }
}
