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
#include <optional>
#include <string_view>
#include <vector>

namespace topo2d::kernels {

enum class Isa : std::uint8_t { Scalar, Avx2, Neon };

/// Row kernels over 0/1 byte rows.
///
/// config_row: `above`, `row` and `below` point at column 0 of rows that are
/// readable on [-1, n], with zero padding standing for the white outside.
/// masks[i] receives the 8-neighbour configuration of column i.
///
/// classify_row: out[i] = centers[i] ? lut[masks[i]] : background.
struct RowKernels {
  void (*config_row)(const std::uint8_t* above, const std::uint8_t* row,
                     const std::uint8_t* below, std::uint8_t* masks, std::size_t n);
  void (*classify_row)(const std::uint8_t* masks, const std::uint8_t* centers,
                       const std::uint8_t* lut, std::uint8_t background, std::uint8_t* out,
                       std::size_t n);
};

/// Whether the kernels were compiled in and the running CPU supports them.
bool isa_available(Isa isa);

/// Widest available ISA, unless TOPO2D_ISA names another available one.
Isa best_isa();

/// All available ISAs, Scalar first.
std::vector<Isa> available_isas();

/// Throws std::invalid_argument if the ISA is unavailable.
const RowKernels& row_kernels(Isa isa);

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

}  // namespace topo2d::kernels
