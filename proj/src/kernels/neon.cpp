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

// AArch64 NEON row kernels, 16 pixels per iteration.

#include <arm_neon.h>

#include "row_kernels_impl.hpp"

namespace topo2d::kernels::neon {

namespace {

constexpr std::size_t kLanes = 16;

inline uint8x16_t load_bit(const std::uint8_t* p) {
  return vminq_u8(vld1q_u8(p), vdupq_n_u8(1));
}

}  // namespace

void config_row(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                std::uint8_t* masks, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    uint8x16_t m = load_bit(above + i - 1);
    m = vorrq_u8(m, vshlq_n_u8(load_bit(above + i), 1));
    m = vorrq_u8(m, vshlq_n_u8(load_bit(above + i + 1), 2));
    m = vorrq_u8(m, vshlq_n_u8(load_bit(row + i - 1), 3));
    m = vorrq_u8(m, vshlq_n_u8(load_bit(row + i + 1), 4));
    m = vorrq_u8(m, vshlq_n_u8(load_bit(below + i - 1), 5));
    m = vorrq_u8(m, vshlq_n_u8(load_bit(below + i), 6));
    m = vorrq_u8(m, vshlq_n_u8(load_bit(below + i + 1), 7));
    vst1q_u8(masks + i, m);
  }
  if (i < n) scalar::config_row(above + i, row + i, below + i, masks + i, n - i);
}

void classify_row(const std::uint8_t* masks, const std::uint8_t* centers, const std::uint8_t* lut,
                  std::uint8_t background, std::uint8_t* out, std::size_t n) {
  // Four 64-byte table lookups; tbl returns 0 for out-of-range indices, so
  // only the quarter that owns the index contributes to the OR.
  const uint8x16x4_t q0 = vld1q_u8_x4(lut);
  const uint8x16x4_t q1 = vld1q_u8_x4(lut + 64);
  const uint8x16x4_t q2 = vld1q_u8_x4(lut + 128);
  const uint8x16x4_t q3 = vld1q_u8_x4(lut + 192);
  const uint8x16_t step = vdupq_n_u8(64);
  const uint8x16_t bg = vdupq_n_u8(background);

  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    uint8x16_t idx = vld1q_u8(masks + i);
    uint8x16_t cls = vqtbl4q_u8(q0, idx);
    idx = vsubq_u8(idx, step);
    cls = vorrq_u8(cls, vqtbl4q_u8(q1, idx));
    idx = vsubq_u8(idx, step);
    cls = vorrq_u8(cls, vqtbl4q_u8(q2, idx));
    idx = vsubq_u8(idx, step);
    cls = vorrq_u8(cls, vqtbl4q_u8(q3, idx));

    const uint8x16_t white = vceqzq_u8(vld1q_u8(centers + i));
    vst1q_u8(out + i, vbslq_u8(white, bg, cls));
  }
  if (i < n) scalar::classify_row(masks + i, centers + i, lut, background, out + i, n - i);
}

}  // namespace topo2d::kernels::neon
