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

#include <random>

#include "support/brute_topo.hpp"
#include "topo2d/kernels/isa.hpp"
#include "topo2d/topo.hpp"

using namespace topo2d;
using kernels::Isa;

namespace topo2d::kernels {
void PrintTo(Isa isa, std::ostream* os) { *os << isa_name(isa); }
}  // namespace topo2d::kernels

namespace {

// Widths straddling the 16- and 32-lane block sizes.
constexpr std::size_t kWidths[] = {1, 2, 15, 16, 17, 31, 32, 33, 63, 64, 65, 100, 257};

std::vector<std::uint8_t> random_bytes(std::mt19937& rng, std::size_t n, bool binary_only) {
  std::uniform_int_distribution<int> any(0, 255);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) {
    if (binary_only) {
      b = coin(rng) ? 1 : 0;
    } else {
      b = coin(rng) ? 0 : static_cast<std::uint8_t>(any(rng) | 1);
    }
  }
  return v;
}

class RowKernelEquivalence : public ::testing::TestWithParam<Isa> {};

}  // namespace

TEST(KernelDispatch, ScalarAlwaysAvailable) {
  EXPECT_TRUE(kernels::isa_available(Isa::Scalar));
  const auto isas = kernels::available_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::Scalar);
  EXPECT_TRUE(kernels::isa_available(kernels::best_isa()));
}

TEST(KernelDispatch, UnavailableIsaThrows) {
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (!kernels::isa_available(isa)) {
      EXPECT_THROW(kernels::row_kernels(isa), std::invalid_argument);
    }
  }
}

TEST(KernelDispatch, NamesRoundTrip) {
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    EXPECT_EQ(kernels::parse_isa(kernels::isa_name(isa)), isa);
  }
  EXPECT_FALSE(kernels::parse_isa("sse9").has_value());
}

TEST_P(RowKernelEquivalence, ConfigRowMatchesScalar) {
  const auto& ref = kernels::row_kernels(Isa::Scalar);
  const auto& simd = kernels::row_kernels(GetParam());
  std::mt19937 rng(7);
  for (std::size_t w : kWidths) {
    for (int trial = 0; trial < 20; ++trial) {
      // Rows carry one guard byte on each side; any non-zero value is black.
      auto above = random_bytes(rng, w + 2, false);
      auto row = random_bytes(rng, w + 2, false);
      auto below = random_bytes(rng, w + 2, false);
      std::vector<std::uint8_t> expect(w), got(w);
      ref.config_row(above.data() + 1, row.data() + 1, below.data() + 1, expect.data(), w);
      simd.config_row(above.data() + 1, row.data() + 1, below.data() + 1, got.data(), w);
      ASSERT_EQ(got, expect) << "width " << w;
    }
  }
}

TEST_P(RowKernelEquivalence, ClassifyRowMatchesScalar) {
  const auto& ref = kernels::row_kernels(Isa::Scalar);
  const auto& simd = kernels::row_kernels(GetParam());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> byte(0, 255);
  for (std::size_t w : kWidths) {
    for (int trial = 0; trial < 20; ++trial) {
      std::array<std::uint8_t, 256> lut{};
      for (auto& v : lut) v = static_cast<std::uint8_t>(byte(rng) % 7);
      std::vector<std::uint8_t> masks(w);
      for (auto& m : masks) m = static_cast<std::uint8_t>(byte(rng));
      const auto centers = random_bytes(rng, w, false);
      std::vector<std::uint8_t> expect(w), got(w);
      ref.classify_row(masks.data(), centers.data(), lut.data(), 6, expect.data(), w);
      simd.classify_row(masks.data(), centers.data(), lut.data(), 6, got.data(), w);
      ASSERT_EQ(got, expect) << "width " << w;
    }
  }
}

TEST_P(RowKernelEquivalence, EveryMaskThroughClassifyRow) {
  const auto& simd = kernels::row_kernels(GetParam());
  const auto lut = class_lut(ConnPair::four_eight());
  std::vector<std::uint8_t> masks(256), centers(256, 1), out(256);
  for (int m = 0; m < 256; ++m) masks[m] = static_cast<std::uint8_t>(m);
  simd.classify_row(masks.data(), centers.data(), lut.data(), 6, out.data(), 256);
  for (int m = 0; m < 256; ++m) EXPECT_EQ(out[m], lut[m]) << m;
}

TEST_P(RowKernelEquivalence, ConfigMapMatchesConfigOf) {
  std::mt19937 rng(3);
  for (auto [w, h] : {std::pair{1, 1}, {5, 3}, {33, 7}, {70, 9}}) {
    const BinaryImage img = testkit::random_image(rng, w, h);
    const auto masks = config_map(img, GetParam());
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        ASSERT_EQ(masks[static_cast<std::size_t>(y) * w + x], config_of(img, {x, y}).mask)
            << x << "," << y;
      }
    }
  }
}

TEST_P(RowKernelEquivalence, ClassifyImageMatchesPointwise) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const BinaryImage img = testkit::random_image(rng, 40, 17, 0.55);
    for (ConnPair pair : kBothPairs) {
      const ClassMap fast = classify_image(img, pair, GetParam());
      EXPECT_EQ(fast, classify_image(img, pair, Isa::Scalar));
      for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
          const PointClass want =
              img.at(x, y) ? classify(config_of(img, {x, y}), pair) : PointClass::Background;
          ASSERT_EQ(fast.at(x, y), want);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AvailableIsas, RowKernelEquivalence,
                         ::testing::ValuesIn(kernels::available_isas()),
                         [](const ::testing::TestParamInfo<Isa>& info) {
                           return std::string(kernels::isa_name(info.param));
                         });
