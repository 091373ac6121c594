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

// AVX2 row kernels, 32 pixels per iteration. This translation unit is built
// with -mavx2 and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include "row_kernels_impl.hpp"

namespace topo2d::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 32;

// 0/1 per byte regardless of the input's non-zero encoding.
inline __m256i load_bit(const std::uint8_t* p) {
  const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  return _mm256_andnot_si256(_mm256_cmpeq_epi8(v, _mm256_setzero_si256()), _mm256_set1_epi8(1));
}

// Bytes hold 0 or 1, so a 16-bit shift by at most 7 never carries across bytes.
template <int Shift>
inline __m256i bit_at(const std::uint8_t* p) {
  return _mm256_slli_epi16(load_bit(p), Shift);
}

}  // namespace

void config_row(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                std::uint8_t* masks, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i m = load_bit(above + i - 1);
    m = _mm256_or_si256(m, bit_at<1>(above + i));
    m = _mm256_or_si256(m, bit_at<2>(above + i + 1));
    m = _mm256_or_si256(m, bit_at<3>(row + i - 1));
    m = _mm256_or_si256(m, bit_at<4>(row + i + 1));
    m = _mm256_or_si256(m, bit_at<5>(below + i - 1));
    m = _mm256_or_si256(m, bit_at<6>(below + i));
    m = _mm256_or_si256(m, bit_at<7>(below + i + 1));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(masks + i), m);
  }
  if (i < n) scalar::config_row(above + i, row + i, below + i, masks + i, n - i);
}

void classify_row(const std::uint8_t* masks, const std::uint8_t* centers, const std::uint8_t* lut,
                  std::uint8_t background, std::uint8_t* out, std::size_t n) {
  // The 256-entry table is split into 16 rows of 16 bytes: the low nibble of
  // the mask indexes a row with pshufb, the high nibble selects the row.
  __m256i rows[16];
  for (int h = 0; h < 16; ++h) {
    rows[h] = _mm256_broadcastsi128_si256(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(lut + 16 * h)));
  }
  const __m256i nibble = _mm256_set1_epi8(0x0F);
  const __m256i zero = _mm256_setzero_si256();
  const __m256i bg = _mm256_set1_epi8(static_cast<char>(background));

  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
    const __m256i lo = _mm256_and_si256(m, nibble);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(m, 4), nibble);

    __m256i cls = zero;
    for (int h = 0; h < 16; ++h) {
      const __m256i hit = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(static_cast<char>(h)));
      cls = _mm256_blendv_epi8(cls, _mm256_shuffle_epi8(rows[h], lo), hit);
    }

    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(centers + i));
    const __m256i white = _mm256_cmpeq_epi8(c, zero);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_blendv_epi8(cls, bg, white));
  }
  if (i < n) scalar::classify_row(masks + i, centers + i, lut, background, out + i, n - i);
}

}  // namespace topo2d::kernels::avx2
