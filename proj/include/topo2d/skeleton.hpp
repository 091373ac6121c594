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

#include <cstdint>

#include "topo2d/grid.hpp"

namespace topo2d {

struct SkeletonOptions {
  bool preserve_curve_ends = false;
  int max_iters = 10'000;
};

struct SkeletonResult {
  BinaryImage image;
  int iterations = 0;         // raster passes run, including the final empty one
  std::int64_t deleted = 0;
  bool converged = false;     // false if max_iters passes all deleted something
};

/// Sequential thinning: scans in raster order and deletes every point that is
/// simple at the moment it is tested (curve ends are kept when requested),
/// until a full pass deletes nothing.
SkeletonResult skeletonize(const BinaryImage& img, ConnPair pair, const SkeletonOptions& opts = {});

}  // namespace topo2d
