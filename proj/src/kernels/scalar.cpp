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

// Reference row kernels. The SIMD variants must match these byte for byte.

#include "row_kernels_impl.hpp"

namespace topo2d::kernels::scalar {

void config_row(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                std::uint8_t* masks, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::ptrdiff_t x = static_cast<std::ptrdiff_t>(i);
    unsigned m = 0;
    m |= static_cast<unsigned>(above[x - 1] != 0) << 0;
    m |= static_cast<unsigned>(above[x] != 0) << 1;
    m |= static_cast<unsigned>(above[x + 1] != 0) << 2;
    m |= static_cast<unsigned>(row[x - 1] != 0) << 3;
    m |= static_cast<unsigned>(row[x + 1] != 0) << 4;
    m |= static_cast<unsigned>(below[x - 1] != 0) << 5;
    m |= static_cast<unsigned>(below[x] != 0) << 6;
    m |= static_cast<unsigned>(below[x + 1] != 0) << 7;
    masks[i] = static_cast<std::uint8_t>(m);
  }
}

void classify_row(const std::uint8_t* masks, const std::uint8_t* centers, const std::uint8_t* lut,
                  std::uint8_t background, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = centers[i] ? lut[masks[i]] : background;
  }
}

}  // namespace topo2d::kernels::scalar
