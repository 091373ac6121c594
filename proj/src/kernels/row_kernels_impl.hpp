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

#include <cstddef>
#include <cstdint>

namespace topo2d::kernels {

namespace scalar {
void config_row(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                std::uint8_t* masks, std::size_t n);
void classify_row(const std::uint8_t* masks, const std::uint8_t* centers, const std::uint8_t* lut,
                  std::uint8_t background, std::uint8_t* out, std::size_t n);
}  // namespace scalar

#if defined(TOPO2D_HAVE_AVX2)
namespace avx2 {
void config_row(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                std::uint8_t* masks, std::size_t n);
void classify_row(const std::uint8_t* masks, const std::uint8_t* centers, const std::uint8_t* lut,
                  std::uint8_t background, std::uint8_t* out, std::size_t n);
}  // namespace avx2
#endif

#if defined(TOPO2D_HAVE_NEON)
namespace neon {
void config_row(const std::uint8_t* above, const std::uint8_t* row, const std::uint8_t* below,
                std::uint8_t* masks, std::size_t n);
void classify_row(const std::uint8_t* masks, const std::uint8_t* centers, const std::uint8_t* lut,
                  std::uint8_t background, std::uint8_t* out, std::size_t n);
}  // namespace neon
#endif

}  // namespace topo2d::kernels
