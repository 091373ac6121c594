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

#include "topo2d/skeleton.hpp"

#include "topo2d/topo.hpp"

namespace topo2d {

SkeletonResult skeletonize(const BinaryImage& img, ConnPair pair, const SkeletonOptions& opts) {
  const LocalTables& tables = LocalTables::standard();
  SkeletonResult result{img, 0, 0, false};
  BinaryImage& cur = result.image;

  while (result.iterations < opts.max_iters) {
    ++result.iterations;
    std::int64_t pass_deleted = 0;
    for (int y = 0; y < cur.height(); ++y) {
      for (int x = 0; x < cur.width(); ++x) {
        if (!cur.at(x, y)) continue;
        const Config c = config_of(cur, {x, y});
        if (!is_simple(c, pair, tables)) continue;
        if (opts.preserve_curve_ends && is_curve_end(c, pair, tables)) continue;
        cur.set(x, y, false);
        ++pass_deleted;
      }
    }
    result.deleted += pass_deleted;
    if (pass_deleted == 0) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace topo2d
